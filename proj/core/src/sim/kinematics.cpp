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

#include "jubileo/sim/kinematics.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/Geometry>

namespace jubileo::sim {

KinematicChain::KinematicChain(const model::RobotModel& model, std::string_view end_link) {
  std::string link(end_link);
  // Walk up the tree; each link has at most one parent joint.
  for (std::size_t guard = 0; guard <= model.joints.size() + model.fixed_joints.size(); ++guard) {
    const auto revolute = std::find_if(model.joints.begin(), model.joints.end(),
                                       [&](const auto& j) { return j.child_link == link; });
    if (revolute != model.joints.end()) {
      links_.push_back({revolute->origin, revolute->name, revolute->axis});
      link = revolute->parent_link;
      continue;
    }
    const auto fixed = std::find_if(model.fixed_joints.begin(), model.fixed_joints.end(),
                                    [&](const auto& j) { return j.child_link == link; });
    if (fixed != model.fixed_joints.end()) {
      links_.push_back({fixed->origin, std::nullopt, {0.0, 0.0, 1.0}});
      link = fixed->parent_link;
      continue;
    }
    if (links_.empty()) throw std::invalid_argument("no joint leads to link '" + std::string(end_link) + "'");
    std::reverse(links_.begin(), links_.end());
    return;
  }
  throw std::invalid_argument("kinematic loop above link '" + std::string(end_link) + "'");
}

model::Vec3 KinematicChain::EndPoint(const model::FacePose& pose) const {
  Eigen::Isometry3d t = Eigen::Isometry3d::Identity();
  for (const Link& l : links_) {
    t.translate(Eigen::Vector3d(l.origin[0], l.origin[1], l.origin[2]));
    if (l.joint) {
      const Eigen::Vector3d axis = Eigen::Vector3d(l.axis[0], l.axis[1], l.axis[2]).normalized();
      t.rotate(Eigen::AngleAxisd(pose.get(*l.joint).value_or(0.0), axis));
    }
  }
  const Eigen::Vector3d p = t.translation();
  return {p.x(), p.y(), p.z()};
}

std::vector<std::string> KinematicChain::joint_names() const {
  std::vector<std::string> names;
  for (const Link& l : links_) {
    if (l.joint) names.push_back(*l.joint);
  }
  return names;
}

}  // namespace jubileo::sim
