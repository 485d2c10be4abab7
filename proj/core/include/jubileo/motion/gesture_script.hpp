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

#ifndef JUBILEO_MOTION_GESTURE_SCRIPT_HPP_
#define JUBILEO_MOTION_GESTURE_SCRIPT_HPP_

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jubileo/model/robot_model.hpp"
#include "jubileo/motion/trajectory.hpp"

namespace jubileo::motion {

class ScriptError : public std::runtime_error {
 public:
  ScriptError(const std::string& gesture, int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) +
                           (gesture.empty() ? "" : " (gesture '" + gesture + "')") + ": " + what),
        gesture_(gesture),
        line_(line) {}
  const std::string& gesture() const { return gesture_; }
  int line() const { return line_; }

 private:
  std::string gesture_;
  int line_;
};

using GestureMap = std::map<std::string, Trajectory, std::less<>>;

// Parses a .kfs keyframe script:
//
//   gesture reach_forward
//   key 0.0 r_shoulder_pitch=0.0 r_elbow=0.0
//   key 1.6 r_shoulder_pitch=1.45 r_elbow=0.35
//   end
//
// A joint a key leaves out keeps its previous value (or its first mentioned
// value, for keys before the first mention). Every joint must exist in
// `model`, stay within its limits, and respect its velocity limit.
GestureMap LoadGestureScript(std::string_view text, const model::RobotModel& model);
GestureMap LoadGestureScriptFile(const std::filesystem::path& path, const model::RobotModel& model);

}  // namespace jubileo::motion

#endif  // JUBILEO_MOTION_GESTURE_SCRIPT_HPP_
