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

#ifndef JUBILEO_MOTION_TRAJECTORY_HPP_
#define JUBILEO_MOTION_TRAJECTORY_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jubileo/model/face_pose.hpp"
#include "jubileo/model/robot_model.hpp"

namespace jubileo::motion {

class TrajectoryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Keyframe {
  double time = 0.0;  // seconds from trajectory start
  model::FacePose pose;

  friend bool operator==(const Keyframe&, const Keyframe&) = default;
};

// Per-joint slew limits in rad/s.
struct RateLimits {
  double default_limit = 2.0;
  std::map<std::string, double, std::less<>> per_joint;

  double For(std::string_view joint) const;

  friend bool operator==(const RateLimits&, const RateLimits&) = default;
};

RateLimits RateLimitsFromModel(const model::RobotModel& model, double default_limit = 2.0);

// Time-ascending keyframes over one fixed joint set, sampled by piecewise
// linear interpolation and held constant outside [0, duration].
class Trajectory {
 public:
  // Throws TrajectoryError unless there is at least one keyframe, times are
  // finite, non-negative and strictly increasing, and every keyframe names
  // the same joints.
  Trajectory(std::vector<Keyframe> keyframes, RateLimits limits);

  const std::vector<Keyframe>& keyframes() const { return keyframes_; }
  const RateLimits& rate_limits() const { return limits_; }
  double duration() const { return keyframes_.back().time; }
  const model::FacePose& front() const { return keyframes_.front().pose; }
  const model::FacePose& back() const { return keyframes_.back().pose; }

  model::FacePose Sample(double t) const;

  // Describes the first adjacent keyframe pair whose implied speed exceeds
  // the joint's limit by more than `tolerance`, or nullopt if none does.
  std::optional<std::string> FindRateViolation(double tolerance = 1e-9) const;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;

 private:
  std::vector<Keyframe> keyframes_;
  RateLimits limits_;
};

}  // namespace jubileo::motion

#endif  // JUBILEO_MOTION_TRAJECTORY_HPP_
