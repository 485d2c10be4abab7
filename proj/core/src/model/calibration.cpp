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

#include "jubileo/model/calibration.hpp"

#include <algorithm>
#include <cmath>

namespace jubileo::model {

std::uint16_t AngleToPulse(const JointDescriptor& joint, double angle) {
  const double a = joint.Clamp(angle);
  double ratio = (a - joint.min_angle) / (joint.max_angle - joint.min_angle);
  if (joint.direction < 0) ratio = 1.0 - ratio;
  const double span = static_cast<double>(joint.pulse_max) - joint.pulse_min;
  // std::lround rounds halfway cases away from zero.
  const long pulse = std::lround(joint.pulse_min + span * ratio);
  return static_cast<std::uint16_t>(std::clamp<long>(pulse, joint.pulse_min, joint.pulse_max));
}

std::vector<ServoCommand> PoseToPulses(const RobotModel& model, const FacePose& pose) {
  for (const auto& [joint, angle] : pose.angles) {
    if (model.Find(joint) == nullptr) throw MappingError("pose names unknown joint '" + joint + "'");
  }
  std::vector<ServoCommand> out;
  for (const auto* j : model.ChannelJoints()) {
    const double angle = pose.get(j->name).value_or(j->neutral_angle);
    out.push_back({*j->servo_channel, AngleToPulse(*j, angle)});
  }
  return out;
}

FacePose ValidatePose(const RobotModel& model, const FacePose& pose,
                      std::vector<std::string>* warnings) {
  FacePose out;
  for (const auto& [joint, angle] : pose.angles) {
    const auto* j = model.Find(joint);
    if (j == nullptr) {
      if (warnings) warnings->push_back("stripped unknown joint '" + joint + "'");
      continue;
    }
    out.set(joint, std::isnan(angle) ? j->neutral_angle : j->Clamp(angle));
  }
  return out;
}

}  // namespace jubileo::model
