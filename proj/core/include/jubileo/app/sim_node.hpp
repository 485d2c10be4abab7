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

#ifndef JUBILEO_APP_SIM_NODE_HPP_
#define JUBILEO_APP_SIM_NODE_HPP_

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <variant>

#include "jubileo/bus/address.hpp"
#include "jubileo/bus/client.hpp"
#include "jubileo/model/robot_model.hpp"
#include "jubileo/sim/detect.hpp"
#include "jubileo/sim/world.hpp"

namespace jubileo::app {

struct SimNodeOptions {
  bus::Address broker;
  model::RobotModel body;
  sim::Scene scene;
  std::uint64_t seed = 1;
  double rate_hz = 30.0;
  // Wall-clock speed-up; 0 runs frames back to back.
  double time_scale = 1.0;
  // Wait after each frame until the behavior node reports it has processed
  // that frame on /behavior/state. Keeps closed-loop runs reproducible.
  bool sync_behavior = false;
  std::chrono::milliseconds sync_timeout{2000};
  std::optional<std::uint64_t> max_frames;
  sim::DetectorNoise noise;
  sim::CameraModel camera;
};

// Owns the World and steps it at a fixed rate, publishing /face/pose_state,
// /world/objects and /camera/detections for every frame (frame 0 is the
// initial state) and applying /face/pose_cmd, /arm/trajectory and
// /world/move_object.
class SimNode {
 public:
  // Connects to the broker; throws std::system_error or sim::SceneError.
  explicit SimNode(SimNodeOptions options);
  ~SimNode();

  // Both hooks run on the Run() thread. `before_step` sees the world just
  // before the step that produces the next frame; `after_frame` runs once a
  // frame has been published (and, with sync_behavior, acknowledged).
  void SetBeforeStep(std::function<void(const sim::World&)> hook) { before_step_ = std::move(hook); }
  void SetAfterFrame(std::function<void(const sim::World&)> hook) { after_frame_ = std::move(hook); }

  void Run();
  void Stop();

  bus::BusClient& client() { return *client_; }
  // Only from a hook or after Run() returns.
  const sim::World& world() const { return world_; }
  std::uint64_t malformed_messages() const { return malformed_.load(); }
  std::uint64_t sync_timeouts() const { return sync_timeouts_.load(); }

 private:
  using Inbound = std::variant<sim::JointCommand, sim::MoveRequest>;

  void PublishFrame();
  void WaitForBehavior(std::uint64_t frame);
  void DrainInbox();

  SimNodeOptions options_;
  sim::World world_;
  std::unique_ptr<bus::BusClient> client_;
  std::function<void(const sim::World&)> before_step_;
  std::function<void(const sim::World&)> after_frame_;

  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<Inbound> inbox_;
  std::optional<std::uint64_t> acknowledged_;
  bool stop_ = false;

  std::atomic<std::uint64_t> malformed_{0};
  std::atomic<std::uint64_t> sync_timeouts_{0};
};

}  // namespace jubileo::app

#endif  // JUBILEO_APP_SIM_NODE_HPP_
