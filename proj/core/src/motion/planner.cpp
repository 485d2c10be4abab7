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

#include "jubileo/motion/planner.hpp"

#include <algorithm>
#include <cmath>

namespace jubileo::motion {

double Smoothstep(double u) {
  u = std::clamp(u, 0.0, 1.0);
  return u * u * (3.0 - 2.0 * u);
}

model::FacePose Blend(const model::FacePose& a, const model::FacePose& b, double t) {
  if (!model::SameJoints(a, b)) throw BlendError("blend needs poses over the same joints");
  if (!(t >= 0.0 && t <= 1.0)) throw BlendError("blend parameter must lie in [0, 1]");
  model::FacePose out;
  auto it_b = b.angles.begin();
  for (const auto& [joint, angle_a] : a.angles) {
    out.angles.emplace_hint(out.angles.end(), joint, (1.0 - t) * angle_a + t * it_b->second);
    ++it_b;
  }
  return out;
}

PlannedTransition PlanTransition(const model::FacePose& from, const model::FacePose& to,
                                 double duration, const RateLimits& limits) {
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw std::invalid_argument("transition duration must be positive");
  }
  if (!model::SameJoints(from, to)) {
    throw std::invalid_argument("transition endpoints must cover the same joints");
  }
  double feasible = duration;
  bool moves = false;
  for (const auto& [joint, start] : from.angles) {
    const double displacement = std::abs(*to.get(joint) - start);
    if (displacement > 0.0) moves = true;
    feasible = std::max(feasible, kSmoothstepPeakSlope * displacement / limits.For(joint));
  }
  if (!moves) {
    return {Trajectory({{0.0, from}, {duration, to}}, limits), 0.0};
  }

  std::vector<Keyframe> keyframes;
  const double step = 1.0 / kControlRateHz;
  const auto intervals = static_cast<long>(std::ceil(feasible * kControlRateHz - 1e-9));
  keyframes.reserve(static_cast<std::size_t>(intervals) + 1);
  keyframes.push_back({0.0, from});
  for (long k = 1; k < intervals; ++k) {
    const double t = static_cast<double>(k) * step;
    if (t >= feasible) break;
    keyframes.push_back({t, Blend(from, to, Smoothstep(t / feasible))});
  }
  keyframes.push_back({feasible, to});
  return {Trajectory(std::move(keyframes), limits), feasible - duration};
}

}  // namespace jubileo::motion
