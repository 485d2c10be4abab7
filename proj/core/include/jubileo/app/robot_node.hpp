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

#ifndef JUBILEO_APP_ROBOT_NODE_HPP_
#define JUBILEO_APP_ROBOT_NODE_HPP_

#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>

#include "jubileo/bus/address.hpp"
#include "jubileo/bus/client.hpp"
#include "jubileo/model/face_pose.hpp"
#include "jubileo/model/robot_model.hpp"
#include "jubileo/motion/trajectory.hpp"

namespace jubileo::app {

struct RobotNodeOptions {
  bus::Address broker;
  model::RobotModel model;  // channel-bearing joints are driven
  double rate_hz = 30.0;
  std::optional<std::uint64_t> max_frames;
};

// Follows /face/pose_cmd trajectories in wall time and writes one servo frame
// per tick to `out` (a serial device, pseudo-terminal or plain file). Joints
// without a servo channel are ignored.
class RobotNode {
 public:
  RobotNode(RobotNodeOptions options, std::ostream& out);
  ~RobotNode();

  void Run();
  void Stop();

  std::uint64_t frames_written() const { return frames_.load(); }
  std::uint64_t malformed_messages() const { return malformed_.load(); }
  model::FacePose current_pose() const;

 private:
  using Clock = std::chrono::steady_clock;

  void Tick(Clock::time_point now, double dt);

  RobotNodeOptions options_;
  std::ostream& out_;
  std::unique_ptr<bus::BusClient> client_;
  motion::RateLimits limits_;

  mutable std::mutex mu_;
  model::FacePose pose_;
  std::optional<motion::Trajectory> active_;
  Clock::time_point active_start_;

  std::atomic<bool> stop_{false};
  std::atomic<std::uint64_t> frames_{0};
  std::atomic<std::uint64_t> malformed_{0};
};

}  // namespace jubileo::app

#endif  // JUBILEO_APP_ROBOT_NODE_HPP_
