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

#ifndef JUBILEO_MSG_MESSAGES_HPP_
#define JUBILEO_MSG_MESSAGES_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jubileo/model/face_pose.hpp"
#include "jubileo/sim/detect.hpp"
#include "jubileo/sim/world.hpp"

// JSON payloads carried on the bus. Every Decode* throws MessageError on
// malformed input; Encode* output decodes back to an equal value, doubles
// included.
namespace jubileo::msg {

class MessageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// /face/pose_state: every body joint once per simulated frame.
struct PoseState {
  std::uint64_t frame_seq = 0;
  double time = 0.0;
  model::FacePose joints;

  friend bool operator==(const PoseState&, const PoseState&) = default;
};

// /world/objects
struct WorldSnapshot {
  std::uint64_t frame_seq = 0;
  double time = 0.0;
  std::vector<sim::SceneObject> objects;
  std::vector<sim::AvatarState> avatars;
  std::optional<std::string> grabbed;
  sim::Vec3 end_effector{};

  friend bool operator==(const WorldSnapshot&, const WorldSnapshot&) = default;
};

// /behavior/state. `event` is "transition", "heartbeat" or "error".
struct BehaviorStatus {
  std::string event = "heartbeat";
  std::string mode = "Idle";
  std::string state = "Idle";            // mode with its parameters, e.g. "TrackingColor(red)"
  std::optional<std::string> detail;     // color, expression or utterance
  std::optional<std::string> return_to;  // mode resumed after an expression or speech
  double entered_at = 0.0;
  double time = 0.0;
  std::uint64_t frame_seq = 0;
  std::optional<std::string> target;
  std::optional<double> error_px;
  std::optional<std::string> message;

  friend bool operator==(const BehaviorStatus&, const BehaviorStatus&) = default;
};

// /speech/say
struct SayMessage {
  std::string text;
  double time = 0.0;

  friend bool operator==(const SayMessage&, const SayMessage&) = default;
};

// /identity/events
struct IdentityEvent {
  std::string name;
  double score = 0.0;
  double time = 0.0;

  friend bool operator==(const IdentityEvent&, const IdentityEvent&) = default;
};

std::string Encode(const PoseState& m);
std::string Encode(const WorldSnapshot& m);
std::string Encode(const sim::DetectionSet& m);
std::string Encode(const sim::JointCommand& m);
std::string Encode(const sim::MoveRequest& m);
std::string Encode(const BehaviorStatus& m);
std::string Encode(const SayMessage& m);
std::string Encode(const IdentityEvent& m);

PoseState DecodePoseState(std::string_view text);
WorldSnapshot DecodeWorldSnapshot(std::string_view text);
sim::DetectionSet DecodeDetectionSet(std::string_view text);
sim::JointCommand DecodeJointCommand(std::string_view text);
sim::MoveRequest DecodeMoveRequest(std::string_view text);
BehaviorStatus DecodeBehaviorStatus(std::string_view text);
SayMessage DecodeSayMessage(std::string_view text);
IdentityEvent DecodeIdentityEvent(std::string_view text);

}  // namespace jubileo::msg

#endif  // JUBILEO_MSG_MESSAGES_HPP_
