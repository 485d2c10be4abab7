// Copyright 2026 The Jubileo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JUBILEO_APP_DEMO_HPP_
#define JUBILEO_APP_DEMO_HPP_

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <thread>

#include "jubileo/app/behavior_node.hpp"
#include "jubileo/app/sim_node.hpp"
#include "jubileo/bus/address.hpp"
#include "jubileo/bus/broker_server.hpp"
#include "jubileo/bus/gateway.hpp"

namespace jubileo::app {

inline constexpr const char* kDefaultScene = "scenes/tabletop.json";

// Topics the console may see and send by default.
std::set<std::string> DefaultGatewayAllowlist();

struct DemoOptions {
  bus::Address broker{"127.0.0.1", bus::kDefaultBrokerPort};  // port 0 picks a free port
  std::optional<bus::Address> gateway = bus::Address{"127.0.0.1", bus::kDefaultGatewayPort};
  std::set<std::string> allowlist = DefaultGatewayAllowlist();
  std::filesystem::path scene = kDefaultScene;
  std::filesystem::path model = "models/jubileo_body.urdf";
  std::optional<std::filesystem::path> registry;
  std::uint64_t seed = 1;
  double rate_hz = 30.0;
  double time_scale = 1.0;  // 0 runs as fast as lockstep allows
  std::optional<std::uint64_t> max_frames;
};

// Broker, behavior node, gateway and lockstep sim in one process. The
// constructor binds every port; Run() blocks until Stop() or max_frames.
class Demo {
 public:
  explicit Demo(DemoOptions options);
  ~Demo();
  Demo(const Demo&) = delete;
  Demo& operator=(const Demo&) = delete;

  void Run();
  void Stop();

  bus::Address broker_address() const { return {"127.0.0.1", broker_->port()}; }
  std::optional<std::uint16_t> gateway_port() const;
  SimNode& sim() { return *sim_; }
  BehaviorNode& behavior() { return *behavior_; }

 private:
  void Shutdown();

  DemoOptions options_;
  std::unique_ptr<bus::BrokerServer> broker_;
  std::unique_ptr<BehaviorNode> behavior_;
  std::unique_ptr<bus::GatewayServer> gateway_;
  std::unique_ptr<SimNode> sim_;
  std::thread broker_thread_;
  std::thread behavior_thread_;
  std::thread gateway_thread_;
  std::atomic<bool> stopped_{false};
};

}  // namespace jubileo::app

#endif  // JUBILEO_APP_DEMO_HPP_
