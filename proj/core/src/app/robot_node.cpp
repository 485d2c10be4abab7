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

#include "jubileo/app/robot_node.hpp"

#include <algorithm>
#include <thread>

#include "jubileo/bus/topic.hpp"
#include "jubileo/model/calibration.hpp"
#include "jubileo/model/servo_frame.hpp"
#include "jubileo/msg/messages.hpp"

namespace jubileo::app {

RobotNode::RobotNode(RobotNodeOptions options, std::ostream& out)
    : options_(std::move(options)), out_(out), limits_(motion::RateLimitsFromModel(options_.model)) {
  if (!(options_.rate_hz > 0.0)) throw std::invalid_argument("robot rate must be positive");
  for (const auto* joint : options_.model.ChannelJoints()) pose_.angles[joint->name] = joint->neutral_angle;
  client_ = std::make_unique<bus::BusClient>(options_.broker);
  client_->Subscribe(bus::topics::kFacePoseCmd, [this](const bus::Envelope& env) {
    sim::JointCommand command;
    try {
      command = msg::DecodeJointCommand(env.payload_view());
    } catch (const std::exception&) {
      ++malformed_;
      return;
    }
    // Keep only the joints this robot has servos for.
    std::vector<motion::Keyframe> keys;
    for (const auto& key : command.keyframes) {
      motion::Keyframe k{key.time, {}};
      for (const auto& [name, angle] : key.pose.angles) {
        const auto* joint = options_.model.Find(name);
        if (joint != nullptr && joint->servo_channel) k.pose.angles[name] = angle;
      }
      keys.push_back(std::move(k));
    }
    if (keys.empty() || keys.front().pose.empty()) return;
    std::lock_guard lock(mu_);
    try {
      active_.emplace(std::move(keys), limits_);
    } catch (const motion::TrajectoryError&) {
      ++malformed_;
      return;
    }
    active_start_ = Clock::now();
  });
  client_->Sync();
}

RobotNode::~RobotNode() {
  Stop();
  client_->Close();
}

model::FacePose RobotNode::current_pose() const {
  std::lock_guard lock(mu_);
  return pose_;
}

void RobotNode::Tick(Clock::time_point now, double dt) {
  model::FacePose pose;
  {
    std::lock_guard lock(mu_);
    if (active_) {
      const double t = std::chrono::duration<double>(now - active_start_).count();
      for (const auto& [name, target] : active_->Sample(std::min(t, active_->duration())).angles) {
        double& angle = pose_.angles[name];
        const double step = limits_.For(name) * dt;
        angle += std::clamp(target - angle, -step, step);
      }
    }
    pose = pose_;
  }
  const auto bytes = model::EncodeServoFrame(model::PoseToPulses(options_.model, pose));
  out_.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  out_.flush();
  ++frames_;
}

void RobotNode::Run() {
  const auto period = std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(1.0 / options_.rate_hz));
  auto next = Clock::now();
  while (!stop_.load()) {
    Tick(Clock::now(), 1.0 / options_.rate_hz);
    if (!out_) throw std::runtime_error("serial write failed");
    if (options_.max_frames && frames_.load() >= *options_.max_frames) break;
    next += period;
    std::this_thread::sleep_until(next);
  }
}

void RobotNode::Stop() { stop_.store(true); }

}  // namespace jubileo::app
