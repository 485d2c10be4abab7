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

#include "jubileo/motion/expression.hpp"

#include "jubileo/common/text.hpp"

namespace jubileo::motion {
namespace {

constexpr std::array<std::string_view, 8> kNames = {"joy",     "neutral", "sadness", "surprise",
                                                     "disgust", "anger",   "fear",    "thinking"};
constexpr std::array<std::string_view, 8> kTitles = {"Joy",     "Neutral", "Sadness", "Surprise",
                                                      "Disgust", "Anger",   "Fear",    "Thinking"};

}  // namespace

std::string_view ExpressionName(ExpressionId id) { return kNames[static_cast<int>(id)]; }
std::string_view ExpressionTitle(ExpressionId id) { return kTitles[static_cast<int>(id)]; }

std::optional<ExpressionId> ParseExpressionId(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<ExpressionId>(i);
  }
  return std::nullopt;
}

ExpressionLibrary ExpressionLibrary::Parse(std::string_view text, const model::RobotModel& face) {
  ExpressionLibrary lib;
  const model::FacePose neutral = face.NeutralFacePose();
  lib.poses_.fill(neutral);
  std::optional<ExpressionId> current;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ExpressionTableError("unterminated section header", line_no);
      const std::string_view name = Trim(line.substr(1, line.size() - 2));
      current = ParseExpressionId(name);
      if (!current) throw ExpressionTableError("unknown expression '" + std::string(name) + "'", line_no);
      if (*current == ExpressionId::kNeutral) {
        throw ExpressionTableError("neutral comes from the robot model and cannot be overridden",
                                   line_no);
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ExpressionTableError("expected 'joint = value'", line_no);
    if (!current) throw ExpressionTableError("entry before any [expression] header", line_no);
    const std::string joint(Trim(line.substr(0, eq)));
    const auto value = ParseNumber(line.substr(eq + 1));
    if (!value) throw ExpressionTableError("bad number for '" + joint + "'", line_no);
    const auto* descriptor = face.Find(joint);
    if (descriptor == nullptr || !descriptor->servo_channel) {
      throw ExpressionTableError("'" + joint + "' is not a face joint", line_no);
    }
    if (*value < descriptor->min_angle || *value > descriptor->max_angle) {
      throw ExpressionTableError("'" + joint + "' value outside joint limits", line_no);
    }
    lib.poses_[static_cast<int>(*current)].set(joint, *value);
  }
  return lib;
}

ExpressionLibrary ExpressionLibrary::Load(const std::filesystem::path& path,
                                          const model::RobotModel& face) {
  return Parse(ReadTextFile(path), face);
}

}  // namespace jubileo::motion
