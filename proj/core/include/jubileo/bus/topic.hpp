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

#ifndef JUBILEO_BUS_TOPIC_HPP_
#define JUBILEO_BUS_TOPIC_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jubileo::bus {

inline constexpr std::size_t kMaxTopicLength = 128;

class TopicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A bus topic path such as "/face/pose_cmd". Valid paths match
// (/[a-z0-9_]+)+ and are at most kMaxTopicLength bytes.
class TopicName {
 public:
  // Throws TopicError when `path` is not a valid topic.
  explicit TopicName(std::string path);

  static bool IsValid(std::string_view path);

  const std::string& str() const { return path_; }
  std::size_t size() const { return path_.size(); }

  friend bool operator==(const TopicName&, const TopicName&) = default;
  friend auto operator<=>(const TopicName&, const TopicName&) = default;

 private:
  std::string path_;
};

// Fixed topic catalog shared by every node.
namespace topics {
inline constexpr std::string_view kFacePoseCmd = "/face/pose_cmd";
inline constexpr std::string_view kFacePoseState = "/face/pose_state";
inline constexpr std::string_view kCameraDetections = "/camera/detections";
inline constexpr std::string_view kSpeechCommandText = "/speech/command_text";
inline constexpr std::string_view kSpeechSay = "/speech/say";
inline constexpr std::string_view kBehaviorState = "/behavior/state";
inline constexpr std::string_view kWorldObjects = "/world/objects";
inline constexpr std::string_view kWorldMoveObject = "/world/move_object";
inline constexpr std::string_view kArmTrajectory = "/arm/trajectory";
inline constexpr std::string_view kIdentityEvents = "/identity/events";
// Control traffic (PING/PONG/ERROR) that is not tied to a data topic.
inline constexpr std::string_view kBusControl = "/bus";
}  // namespace topics

}  // namespace jubileo::bus

template <>
struct std::hash<jubileo::bus::TopicName> {
  std::size_t operator()(const jubileo::bus::TopicName& t) const noexcept {
    return std::hash<std::string>{}(t.str());
  }
};

#endif  // JUBILEO_BUS_TOPIC_HPP_
