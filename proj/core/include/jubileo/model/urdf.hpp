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

#ifndef JUBILEO_MODEL_URDF_HPP_
#define JUBILEO_MODEL_URDF_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "jubileo/model/robot_model.hpp"

namespace jubileo::model {

// Parses the URDF subset used by the project: <robot>, <link name>, revolute
// and fixed <joint>s with <parent>, <child>, <origin xyz>, <axis xyz> and
// <limit lower upper velocity>, plus the servo extension
//
//   <jubileo:actuator group="eyebrow" channel="0" pulse_min="1000"
//                     pulse_max="2000" neutral="0"/>
//
// inside a joint. Everything else (visuals, inertia, transmissions) is
// ignored. Throws DescriptionError.
RobotModel ParseRobotDescription(std::string_view text);
RobotModel LoadRobotDescription(const std::filesystem::path& path);

// Emits a description that parses back to an identical model.
std::string WriteRobotDescription(const RobotModel& model);

}  // namespace jubileo::model

#endif  // JUBILEO_MODEL_URDF_HPP_
