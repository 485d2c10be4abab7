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

#include "jubileo/model/robot_model.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace jubileo::model {
namespace {

constexpr std::array<std::string_view, 6> kGroupNames = {"eyebrow", "eyelid", "eye",
                                                         "mouth",   "neck",   "arm"};

}  // namespace

std::string_view GroupName(JointGroup group) { return kGroupNames[static_cast<int>(group)]; }

std::optional<JointGroup> GroupFromName(std::string_view name) {
  for (std::size_t i = 0; i < kGroupNames.size(); ++i) {
    if (kGroupNames[i] == name) return static_cast<JointGroup>(i);
  }
  return std::nullopt;
}

double JointDescriptor::Clamp(double angle) const { return std::clamp(angle, min_angle, max_angle); }

const JointDescriptor* RobotModel::Find(std::string_view joint) const {
  auto it = std::find_if(joints.begin(), joints.end(),
                         [&](const JointDescriptor& j) { return j.name == joint; });
  return it == joints.end() ? nullptr : &*it;
}

const JointDescriptor& RobotModel::At(std::string_view joint) const {
  if (const auto* j = Find(joint)) return *j;
  throw std::out_of_range("unknown joint '" + std::string(joint) + "'");
}

std::vector<const JointDescriptor*> RobotModel::ChannelJoints() const {
  std::vector<const JointDescriptor*> out;
  for (const auto& j : joints) {
    if (j.servo_channel) out.push_back(&j);
  }
  std::sort(out.begin(), out.end(), [](const auto* a, const auto* b) {
    return *a->servo_channel < *b->servo_channel;
  });
  return out;
}

std::vector<const JointDescriptor*> RobotModel::JointsInGroup(JointGroup group) const {
  std::vector<const JointDescriptor*> out;
  for (const auto& j : joints) {
    if (j.group == group) out.push_back(&j);
  }
  return out;
}

FacePose RobotModel::NeutralPose() const {
  FacePose pose;
  for (const auto& j : joints) pose.set(j.name, j.neutral_angle);
  return pose;
}

FacePose RobotModel::NeutralFacePose() const {
  FacePose pose;
  for (const auto* j : ChannelJoints()) pose.set(j->name, j->neutral_angle);
  return pose;
}

void RobotModel::Validate() const {
  const auto fail = [](const std::string& msg) {
    throw DescriptionError(DescriptionErrc::kSemantic, msg);
  };
  std::set<std::string> names;
  std::set<int> channels;
  for (const auto& j : joints) {
    if (!names.insert(j.name).second) fail("duplicate joint name '" + j.name + "'");
    if (!(j.min_angle < j.max_angle)) fail("joint '" + j.name + "': lower limit must be below upper");
    if (j.neutral_angle < j.min_angle || j.neutral_angle > j.max_angle) {
      fail("joint '" + j.name + "': neutral angle outside limits");
    }
    if (j.pulse_min < kMinPulseUs || j.pulse_max > kMaxPulseUs || j.pulse_min >= j.pulse_max) {
      fail("joint '" + j.name + "': pulse range must satisfy 500 <= min < max <= 2500");
    }
    if (j.direction != 1 && j.direction != -1) fail("joint '" + j.name + "': bad direction");
    if (!(j.velocity_limit > 0.0)) fail("joint '" + j.name + "': velocity limit must be positive");
    if (j.servo_channel && !channels.insert(*j.servo_channel).second) {
      fail("servo channel " + std::to_string(*j.servo_channel) + " used twice");
    }
  }
  for (const auto& f : fixed_joints) {
    if (!names.insert(f.name).second) fail("duplicate joint name '" + f.name + "'");
  }
}

}  // namespace jubileo::model
