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

#include "jubileo/motion/gesture_script.hpp"

#include <set>

#include "jubileo/common/text.hpp"

namespace jubileo::motion {
namespace {

struct PendingKey {
  double time;
  std::map<std::string, double, std::less<>> values;
};

Trajectory BuildGesture(const std::string& name, int line, const std::vector<PendingKey>& keys,
                        const RateLimits& limits) {
  if (keys.empty()) throw ScriptError(name, line, "gesture has no keys");
  // Every joint mentioned anywhere in the gesture appears in every keyframe.
  std::map<std::string, double, std::less<>> current;
  for (const auto& key : keys) {
    for (const auto& [joint, value] : key.values) current.try_emplace(joint, value);
  }
  std::vector<Keyframe> frames;
  for (const auto& key : keys) {
    for (const auto& [joint, value] : key.values) current[joint] = value;
    Keyframe k{key.time, {}};
    k.pose.angles = current;
    frames.push_back(std::move(k));
  }
  try {
    Trajectory t(std::move(frames), limits);
    if (auto violation = t.FindRateViolation()) throw ScriptError(name, line, *violation);
    return t;
  } catch (const TrajectoryError& e) {
    throw ScriptError(name, line, e.what());
  }
}

}  // namespace

GestureMap LoadGestureScript(std::string_view text, const model::RobotModel& model) {
  const RateLimits limits = RateLimitsFromModel(model);
  GestureMap out;
  std::optional<std::string> current;
  int started_at = 0;
  std::vector<PendingKey> keys;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = SplitWhitespace(line);
    if (words.empty()) continue;
    const std::string gesture = current.value_or("");
    if (words[0] == "gesture") {
      if (current) throw ScriptError(gesture, line_no, "missing 'end' before new gesture");
      if (words.size() != 2) throw ScriptError("", line_no, "expected 'gesture <name>'");
      current = std::string(words[1]);
      if (out.contains(*current)) throw ScriptError(*current, line_no, "duplicate gesture name");
      started_at = line_no;
      keys.clear();
    } else if (words[0] == "key") {
      if (!current) throw ScriptError("", line_no, "'key' outside a gesture block");
      if (words.size() < 3) throw ScriptError(gesture, line_no, "expected 'key <t> <joint>=<rad> ...'");
      const auto t = ParseNumber(words[1]);
      if (!t || *t < 0.0) throw ScriptError(gesture, line_no, "bad key time");
      if (!keys.empty() && !(*t > keys.back().time)) {
        throw ScriptError(gesture, line_no, "key times must strictly increase");
      }
      PendingKey key{*t, {}};
      for (std::size_t w = 2; w < words.size(); ++w) {
        const auto eq = words[w].find('=');
        if (eq == std::string_view::npos) throw ScriptError(gesture, line_no, "expected joint=value");
        const std::string joint(words[w].substr(0, eq));
        const auto value = ParseNumber(words[w].substr(eq + 1));
        if (!value) throw ScriptError(gesture, line_no, "bad angle for '" + joint + "'");
        const auto* descriptor = model.Find(joint);
        if (descriptor == nullptr) throw ScriptError(gesture, line_no, "unknown joint '" + joint + "'");
        if (*value < descriptor->min_angle || *value > descriptor->max_angle) {
          throw ScriptError(gesture, line_no, "'" + joint + "' outside joint limits");
        }
        key.values[joint] = *value;
      }
      keys.push_back(std::move(key));
    } else if (words[0] == "end") {
      if (!current) throw ScriptError("", line_no, "'end' without 'gesture'");
      out.emplace(*current, BuildGesture(*current, started_at, keys, limits));
      current.reset();
    } else {
      throw ScriptError(gesture, line_no, "unknown directive '" + std::string(words[0]) + "'");
    }
  }
  if (current) throw ScriptError(*current, line_no, "missing 'end'");
  return out;
}

GestureMap LoadGestureScriptFile(const std::filesystem::path& path, const model::RobotModel& model) {
  return LoadGestureScript(ReadTextFile(path), model);
}

}  // namespace jubileo::motion
