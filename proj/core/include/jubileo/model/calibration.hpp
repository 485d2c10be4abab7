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

#ifndef JUBILEO_MODEL_CALIBRATION_HPP_
#define JUBILEO_MODEL_CALIBRATION_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jubileo/model/face_pose.hpp"
#include "jubileo/model/robot_model.hpp"

namespace jubileo::model {

struct ServoCommand {
  std::uint8_t channel = 0;
  std::uint16_t pulse_us = 1500;

  friend bool operator==(const ServoCommand&, const ServoCommand&) = default;
};

class MappingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Linear angle -> pulse law for one joint: the angle is clamped to the joint
// limits, mapped proportionally onto [pulse_min, pulse_max] (mirrored for
// direction -1) and rounded to the nearest microsecond, ties away from zero.
std::uint16_t AngleToPulse(const JointDescriptor& joint, double angle);

// One command per channel-bearing joint, ordered by channel. Joints absent
// from `pose` are sent at their neutral angle. Throws MappingError when the
// pose names a joint the model does not have.
std::vector<ServoCommand> PoseToPulses(const RobotModel& model, const FacePose& pose);

// Clamps every angle into its joint limits and strips unknown joints. Each
// stripped joint appends one message to `warnings` when it is non-null.
FacePose ValidatePose(const RobotModel& model, const FacePose& pose,
                      std::vector<std::string>* warnings = nullptr);

}  // namespace jubileo::model

#endif  // JUBILEO_MODEL_CALIBRATION_HPP_
