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

#include "jubileo/app/demo.hpp"

#include "jubileo/app/assets.hpp"
#include "jubileo/bus/topic.hpp"
#include "jubileo/model/urdf.hpp"
#include "jubileo/sim/world.hpp"

namespace jubileo::app {

std::set<std::string> DefaultGatewayAllowlist() {
  using namespace bus::topics;
  std::set<std::string> topics;
  for (auto t : {kFacePoseState, kCameraDetections, kSpeechCommandText, kSpeechSay, kBehaviorState, kWorldObjects,
                 kWorldMoveObject, kIdentityEvents}) {
    topics.emplace(t);
  }
  return topics;
}

Demo::Demo(DemoOptions options) : options_(std::move(options)) {
  // Load everything before binding ports so bad files fail fast.
  const auto body = model::LoadRobotDescription(ResolveDataPath(options_.model));
  auto scene = sim::Scene::Load(ResolveDataPath(options_.scene));
  auto assets = LoadBehaviorAssets(ResolveDataPath(options_.model),
                                   options_.registry ? std::optional(ResolveDataPath(*options_.registry))
                                                     : std::nullopt);

  broker_ = std::make_unique<bus::BrokerServer>(bus::BrokerOptions{options_.broker});
  broker_thread_ = std::thread([this] { broker_->Run(); });
  try {
    behavior_ = std::make_unique<BehaviorNode>(BehaviorNodeOptions{broker_address(), {}, 2}, std::move(assets));
    behavior_thread_ = std::thread([this] { behavior_->Run(); });
    if (options_.gateway) {
      gateway_ = std::make_unique<bus::GatewayServer>(
          bus::GatewayOptions{*options_.gateway, broker_address(), options_.allowlist});
      gateway_thread_ = std::thread([this] { gateway_->Run(); });
    }
    SimNodeOptions sim;
    sim.broker = broker_address();
    sim.body = body;
    sim.scene = std::move(scene);
    sim.seed = options_.seed;
    sim.rate_hz = options_.rate_hz;
    sim.time_scale = options_.time_scale;
    sim.sync_behavior = true;
    sim.max_frames = options_.max_frames;
    sim_ = std::make_unique<SimNode>(std::move(sim));
  } catch (...) {
    Shutdown();
    throw;
  }
}

Demo::~Demo() { Shutdown(); }

std::optional<std::uint16_t> Demo::gateway_port() const {
  if (!gateway_) return std::nullopt;
  return gateway_->port();
}

void Demo::Run() {
  sim_->Run();
}

void Demo::Stop() {
  if (sim_) sim_->Stop();
}

void Demo::Shutdown() {
  if (stopped_.exchange(true)) return;
  if (sim_) sim_->Stop();
  if (behavior_) behavior_->Stop();
  if (behavior_thread_.joinable()) behavior_thread_.join();
  if (gateway_) gateway_->Stop();
  if (gateway_thread_.joinable()) gateway_thread_.join();
  sim_.reset();
  gateway_.reset();
  behavior_.reset();
  broker_->Stop();
  if (broker_thread_.joinable()) broker_thread_.join();
}

}  // namespace jubileo::app
