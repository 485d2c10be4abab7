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

#ifndef JUBILEO_SIM_KINEMATICS_HPP_
#define JUBILEO_SIM_KINEMATICS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jubileo/model/face_pose.hpp"
#include "jubileo/model/robot_model.hpp"

namespace jubileo::sim {

// Serial chain from the model root to one link, origin offsets and revolute
// axes in order.
class KinematicChain {
 public:
  // Throws std::invalid_argument if `end_link` is not reachable.
  KinematicChain(const model::RobotModel& model, std::string_view end_link);

  // Position of the end link origin in the root frame. Joints missing from
  // `pose` are taken at zero.
  model::Vec3 EndPoint(const model::FacePose& pose) const;

  std::vector<std::string> joint_names() const;

 private:
  struct Link {
    model::Vec3 origin;
    std::optional<std::string> joint;  // nullopt for fixed joints
    model::Vec3 axis;
  };
  std::vector<Link> links_;
};

inline constexpr std::string_view kRightHandLink = "r_hand";

}  // namespace jubileo::sim

#endif  // JUBILEO_SIM_KINEMATICS_HPP_
