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

#ifndef JUBILEO_MODEL_ROBOT_MODEL_HPP_
#define JUBILEO_MODEL_ROBOT_MODEL_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jubileo/model/face_pose.hpp"

namespace jubileo::model {

enum class JointGroup { kEyebrow, kEyelid, kEye, kMouth, kNeck, kArm };

std::string_view GroupName(JointGroup group);
std::optional<JointGroup> GroupFromName(std::string_view name);

inline constexpr std::uint16_t kMinPulseUs = 500;
inline constexpr std::uint16_t kMaxPulseUs = 2500;

using Vec3 = std::array<double, 3>;

struct JointDescriptor {
  std::string name;
  JointGroup group = JointGroup::kArm;
  double min_angle = 0.0;
  double max_angle = 0.0;
  double neutral_angle = 0.0;
  std::optional<std::uint8_t> servo_channel;
  std::uint16_t pulse_min = 1000;
  std::uint16_t pulse_max = 2000;
  int direction = 1;  // +1 or -1, the sign of the joint axis

  // Kinematic placement and slew limit, straight from the description file.
  std::string parent_link;
  std::string child_link;
  Vec3 origin{0.0, 0.0, 0.0};
  Vec3 axis{0.0, 0.0, 1.0};
  double velocity_limit = 2.0;  // rad/s

  double Clamp(double angle) const;

  friend bool operator==(const JointDescriptor&, const JointDescriptor&) = default;
};

struct FixedJoint {
  std::string name;
  std::string parent_link;
  std::string child_link;
  Vec3 origin{0.0, 0.0, 0.0};

  friend bool operator==(const FixedJoint&, const FixedJoint&) = default;
};

enum class DescriptionErrc { kParse, kSemantic };

class DescriptionError : public std::runtime_error {
 public:
  DescriptionError(DescriptionErrc code, const std::string& what, int line = 0)
      : std::runtime_error(what), code_(code), line_(line) {}
  DescriptionErrc code() const { return code_; }
  // 1-based line of the offending markup, 0 when unknown.
  int line() const { return line_; }

 private:
  DescriptionErrc code_;
  int line_;
};

struct RobotModel {
  std::string name;
  std::vector<std::string> links;
  std::vector<JointDescriptor> joints;  // revolute joints in document order
  std::vector<FixedJoint> fixed_joints;

  const JointDescriptor* Find(std::string_view joint) const;
  const JointDescriptor& At(std::string_view joint) const;  // throws std::out_of_range

  // Channel-bearing joints ordered by channel.
  std::vector<const JointDescriptor*> ChannelJoints() const;
  std::vector<const JointDescriptor*> JointsInGroup(JointGroup group) const;

  // Pose with every joint (or every channel-bearing joint) at neutral.
  FacePose NeutralPose() const;
  FacePose NeutralFacePose() const;

  // Checks the descriptor invariants; throws DescriptionError(kSemantic).
  void Validate() const;

  friend bool operator==(const RobotModel&, const RobotModel&) = default;
};

}  // namespace jubileo::model

#endif  // JUBILEO_MODEL_ROBOT_MODEL_HPP_
