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

#include "jubileo/model/face_pose.hpp"

#include <algorithm>
#include <cmath>

namespace jubileo::model {

bool SameJoints(const FacePose& a, const FacePose& b) {
  return a.angles.size() == b.angles.size() &&
         std::equal(a.angles.begin(), a.angles.end(), b.angles.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first; });
}

double LInfDistance(const FacePose& a, const FacePose& b) {
  double worst = 0.0;
  for (const auto& [joint, angle] : a.angles) {
    if (auto other = b.get(joint)) worst = std::max(worst, std::abs(angle - *other));
  }
  return worst;
}

FacePose Merge(FacePose base, const FacePose& overlay) {
  for (const auto& [joint, angle] : overlay.angles) base.angles.insert_or_assign(joint, angle);
  return base;
}

}  // namespace jubileo::model
