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

#ifndef JUBILEO_APP_BEHAVIOR_NODE_HPP_
#define JUBILEO_APP_BEHAVIOR_NODE_HPP_

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>

#include "jubileo/app/assets.hpp"
#include "jubileo/behavior/fsm.hpp"
#include "jubileo/bus/address.hpp"
#include "jubileo/bus/client.hpp"
#include "jubileo/msg/messages.hpp"

namespace jubileo::app {

struct BehaviorNodeOptions {
  bus::Address broker;
  behavior::BehaviorConfig config;
  // Commands are stamped to start this many frames after the detection
  // frame they react to.
  std::uint64_t command_lead = 2;
};

// Runs the behavior machine on bus events: /speech/command_text,
// /face/pose_state and /camera/detections in, /face/pose_cmd,
// /arm/trajectory, /speech/say, /behavior/state and /identity/events out.
// After each detection frame it publishes a heartbeat on /behavior/state
// carrying that frame's sequence number.
class BehaviorNode {
 public:
  BehaviorNode(BehaviorNodeOptions options, BehaviorAssets assets);
  ~BehaviorNode();

  void Run();
  void Stop();

  behavior::BehaviorState state() const;

 private:
  struct CommandText {
    std::string text;
  };
  using Inbound = std::variant<CommandText, msg::PoseState, sim::DetectionSet>;

  void Handle(const CommandText& in);
  void Handle(const msg::PoseState& in);
  void Handle(const sim::DetectionSet& in);
  void Dispatch(const behavior::Event& event);
  void Execute(const behavior::Action& action);
  void PublishStatus(const std::string& event, std::optional<std::string> message = std::nullopt);
  void PublishFaceCommand(const motion::Trajectory& trajectory);

  BehaviorNodeOptions options_;
  BehaviorAssets assets_;
  behavior::BehaviorMachine machine_;
  std::unique_ptr<bus::BusClient> client_;

  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::deque<Inbound> inbox_;
  bool stop_ = false;
  behavior::BehaviorState state_;

  // Touched only by the Run() thread.
  model::FacePose measured_;
  double now_ = 0.0;
  std::uint64_t frame_seq_ = 0;
};

}  // namespace jubileo::app

#endif  // JUBILEO_APP_BEHAVIOR_NODE_HPP_
