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

#ifndef JUBILEO_MOTION_PLANNER_HPP_
#define JUBILEO_MOTION_PLANNER_HPP_

#include <stdexcept>

#include "jubileo/model/face_pose.hpp"
#include "jubileo/motion/trajectory.hpp"

namespace jubileo::motion {

// Control and keyframe rate shared by planner, simulator and controllers.
inline constexpr double kControlRateHz = 30.0;

// Peak of d/du (3u^2 - 2u^3), reached at u = 1/2.
inline constexpr double kSmoothstepPeakSlope = 1.5;

class BlendError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

double Smoothstep(double u);

// Per-joint (1 - t) a + t b. Throws BlendError when the joint sets differ or
// t is outside [0, 1].
model::FacePose Blend(const model::FacePose& a, const model::FacePose& b, double t);

struct PlannedTransition {
  Trajectory trajectory;
  double stretch = 0.0;  // seconds added to the requested duration
};

// Smoothstep-eased move from `from` to `to`, keyframed at 30 Hz with the last
// keyframe exactly at the (possibly stretched) duration and exactly equal to
// `to`. If any joint would exceed its rate limit the duration is stretched to
// the smallest feasible value, 1.5 * |displacement| / limit.
// Throws std::invalid_argument for a non-positive duration or mismatched
// joint sets.
PlannedTransition PlanTransition(const model::FacePose& from, const model::FacePose& to,
                                 double duration, const RateLimits& limits);

}  // namespace jubileo::motion

#endif  // JUBILEO_MOTION_PLANNER_HPP_
