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

#ifndef JUBILEO_MOTION_EXPRESSION_HPP_
#define JUBILEO_MOTION_EXPRESSION_HPP_

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jubileo/model/face_pose.hpp"
#include "jubileo/model/robot_model.hpp"

namespace jubileo::motion {

enum class ExpressionId { kJoy, kNeutral, kSadness, kSurprise, kDisgust, kAnger, kFear, kThinking };

inline constexpr std::array<ExpressionId, 8> kAllExpressions = {
    ExpressionId::kJoy,     ExpressionId::kNeutral, ExpressionId::kSadness, ExpressionId::kSurprise,
    ExpressionId::kDisgust, ExpressionId::kAnger,   ExpressionId::kFear,    ExpressionId::kThinking};

// Lowercase name ("joy", "thinking", ...).
std::string_view ExpressionName(ExpressionId id);
// Display name ("Joy", "Thinking", ...).
std::string_view ExpressionTitle(ExpressionId id);
std::optional<ExpressionId> ParseExpressionId(std::string_view lowercase_name);

class ExpressionTableError : public std::runtime_error {
 public:
  ExpressionTableError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Canonical face poses. The table file is a flat list of sections:
//
//   [surprise]
//   brow_height_left = 0.55
//   mouth_jaw = 0.45
//
// Face joints a section leaves out stay at their neutral angle. Neutral
// itself is always the model's neutral pose and may not appear in the file.
class ExpressionLibrary {
 public:
  static ExpressionLibrary Parse(std::string_view text, const model::RobotModel& face);
  static ExpressionLibrary Load(const std::filesystem::path& path, const model::RobotModel& face);

  // Covers every channel-bearing joint of the model.
  const model::FacePose& Pose(ExpressionId id) const { return poses_[static_cast<int>(id)]; }

 private:
  std::array<model::FacePose, kAllExpressions.size()> poses_;
};

}  // namespace jubileo::motion

#endif  // JUBILEO_MOTION_EXPRESSION_HPP_
