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

#include "jubileo/motion/trajectory.hpp"

#include <algorithm>
#include <cmath>

#include "jubileo/common/text.hpp"

namespace jubileo::motion {

double RateLimits::For(std::string_view joint) const {
  auto it = per_joint.find(joint);
  return it == per_joint.end() ? default_limit : it->second;
}

RateLimits RateLimitsFromModel(const model::RobotModel& model, double default_limit) {
  RateLimits limits{default_limit, {}};
  for (const auto& j : model.joints) limits.per_joint[j.name] = j.velocity_limit;
  return limits;
}

Trajectory::Trajectory(std::vector<Keyframe> keyframes, RateLimits limits)
    : keyframes_(std::move(keyframes)), limits_(std::move(limits)) {
  if (keyframes_.empty()) throw TrajectoryError("trajectory needs at least one keyframe");
  for (std::size_t i = 0; i < keyframes_.size(); ++i) {
    const double t = keyframes_[i].time;
    if (!std::isfinite(t) || t < 0.0) throw TrajectoryError("keyframe time must be finite and >= 0");
    if (i > 0) {
      if (!(t > keyframes_[i - 1].time)) {
        throw TrajectoryError("keyframe times must strictly increase (at " + FormatNumber(t) + " s)");
      }
      if (!model::SameJoints(keyframes_[i].pose, keyframes_[0].pose)) {
        throw TrajectoryError("every keyframe must cover the same joints");
      }
    }
  }
}

model::FacePose Trajectory::Sample(double t) const {
  if (t <= keyframes_.front().time) return keyframes_.front().pose;
  if (t >= keyframes_.back().time) return keyframes_.back().pose;
  auto upper = std::upper_bound(keyframes_.begin(), keyframes_.end(), t,
                                [](double value, const Keyframe& k) { return value < k.time; });
  const Keyframe& b = *upper;
  const Keyframe& a = *(upper - 1);
  if (t == a.time) return a.pose;
  const double u = (t - a.time) / (b.time - a.time);
  model::FacePose out;
  auto it_b = b.pose.angles.begin();
  for (const auto& [joint, angle_a] : a.pose.angles) {
    out.angles.emplace_hint(out.angles.end(), joint, (1.0 - u) * angle_a + u * it_b->second);
    ++it_b;
  }
  return out;
}

std::optional<std::string> Trajectory::FindRateViolation(double tolerance) const {
  for (std::size_t i = 1; i < keyframes_.size(); ++i) {
    const double dt = keyframes_[i].time - keyframes_[i - 1].time;
    for (const auto& [joint, angle] : keyframes_[i].pose.angles) {
      const double speed = std::abs(angle - *keyframes_[i - 1].pose.get(joint)) / dt;
      const double limit = limits_.For(joint);
      if (speed > limit + tolerance) {
        return "joint '" + joint + "' moves at " + FormatNumber(speed) + " rad/s (limit " +
               FormatNumber(limit) + ") between t=" + FormatNumber(keyframes_[i - 1].time) +
               " and t=" + FormatNumber(keyframes_[i].time);
      }
    }
  }
  return std::nullopt;
}

}  // namespace jubileo::motion
