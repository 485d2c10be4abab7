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

#ifndef JUBILEO_MODEL_FACE_POSE_HPP_
#define JUBILEO_MODEL_FACE_POSE_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace jubileo::model {

// Joint name -> angle in radians. The common currency between expressions,
// behaviors, the robot model and the simulator. May cover any joint subset.
struct FacePose {
  std::map<std::string, double, std::less<>> angles;

  bool empty() const { return angles.empty(); }
  std::size_t size() const { return angles.size(); }
  bool contains(std::string_view joint) const { return angles.find(joint) != angles.end(); }
  std::optional<double> get(std::string_view joint) const {
    auto it = angles.find(joint);
    if (it == angles.end()) return std::nullopt;
    return it->second;
  }
  void set(std::string_view joint, double angle) { angles.insert_or_assign(std::string(joint), angle); }

  friend bool operator==(const FacePose&, const FacePose&) = default;
};

// True when both poses name exactly the same joints.
bool SameJoints(const FacePose& a, const FacePose& b);

// Largest per-joint absolute difference over the shared joint set.
double LInfDistance(const FacePose& a, const FacePose& b);

// Copies `overlay` on top of `base`.
FacePose Merge(FacePose base, const FacePose& overlay);

}  // namespace jubileo::model

#endif  // JUBILEO_MODEL_FACE_POSE_HPP_
