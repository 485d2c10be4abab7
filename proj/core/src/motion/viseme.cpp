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

#include "jubileo/motion/viseme.hpp"

#include <algorithm>
#include <cmath>

#include "jubileo/common/text.hpp"

namespace jubileo::motion {
namespace {

// Mirrors config/visemes.tbl.
constexpr std::string_view kDefaultTable = R"(joints = mouth_jaw mouth_corners
a = 0.50 0.05
e = 0.35 0.15
i = 0.25 0.20
o = 0.45 -0.15
u = 0.30 -0.20
consonant = 0.08 0.00
closed = 0.00 0.00
)";

constexpr std::string_view kRequiredKeys[] = {"a", "e", "i", "o", "u", "consonant", "closed"};

// Classifies one code point starting at text[i] and advances i past it.
std::string_view Classify(std::string_view text, std::size_t& i) {
  const auto c = static_cast<unsigned char>(text[i]);
  if (c >= 0x80) {
    // Multi-byte UTF-8 sequence: skip continuation bytes, treat as a letter.
    ++i;
    while (i < text.size() && (static_cast<unsigned char>(text[i]) & 0xC0) == 0x80) ++i;
    return "consonant";
  }
  ++i;
  const char lower = static_cast<char>(std::tolower(c));
  switch (lower) {
    case 'a': return "a";
    case 'e': return "e";
    case 'i': return "i";
    case 'o': return "o";
    case 'u': return "u";
    default: break;
  }
  if (std::isalnum(c)) return "consonant";
  return "closed";
}

}  // namespace

VisemeTable VisemeTable::Parse(std::string_view text) {
  VisemeTable table;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw VisemeTableError("line " + std::to_string(line_no) + ": expected 'key = values'");
    }
    const std::string key(Trim(line.substr(0, eq)));
    const auto values = SplitWhitespace(line.substr(eq + 1));
    if (key == "joints") {
      for (auto v : values) table.joints.emplace_back(v);
      continue;
    }
    if (table.joints.empty()) {
      throw VisemeTableError("line " + std::to_string(line_no) + ": 'joints' line must come first");
    }
    if (values.size() != table.joints.size()) {
      throw VisemeTableError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(table.joints.size()) + " values");
    }
    model::FacePose shape;
    for (std::size_t k = 0; k < values.size(); ++k) {
      const auto v = ParseNumber(values[k]);
      if (!v) throw VisemeTableError("line " + std::to_string(line_no) + ": bad number");
      shape.set(table.joints[k], *v);
    }
    table.shapes[key] = std::move(shape);
  }
  for (auto key : kRequiredKeys) {
    if (!table.shapes.contains(key)) {
      throw VisemeTableError("viseme table lacks '" + std::string(key) + "'");
    }
  }
  return table;
}

VisemeTable VisemeTable::Load(const std::filesystem::path& path) { return Parse(ReadTextFile(path)); }

VisemeTable VisemeTable::Default() {
  static const VisemeTable table = Parse(kDefaultTable);
  return table;
}

const model::FacePose& VisemeTable::Shape(std::string_view key) const {
  auto it = shapes.find(key);
  if (it == shapes.end()) throw VisemeTableError("no viseme '" + std::string(key) + "'");
  return it->second;
}

Trajectory VisemeSchedule(std::string_view text, double chars_per_second, const VisemeTable& table,
                          const RateLimits& limits) {
  if (!(chars_per_second > 0.0) || !std::isfinite(chars_per_second)) {
    throw std::invalid_argument("viseme rate must be positive");
  }
  const model::FacePose& closed = table.Shape("closed");
  std::vector<Keyframe> keyframes{{0.0, closed}};
  if (text.empty()) return Trajectory(std::move(keyframes), limits);

  const double slot = 1.0 / chars_per_second;
  const auto push = [&](const model::FacePose& target) {
    const Keyframe& prev = keyframes.back();
    const double t = static_cast<double>(keyframes.size()) * slot;
    const double dt = t - prev.time;
    model::FacePose reachable;
    for (const auto& [joint, goal] : target.angles) {
      const double from = *prev.pose.get(joint);
      const double max_delta = limits.For(joint) * dt;
      reachable.set(joint, from + std::clamp(goal - from, -max_delta, max_delta));
    }
    keyframes.push_back({t, std::move(reachable)});
  };
  std::size_t i = 0;
  while (i < text.size()) push(table.Shape(Classify(text, i)));
  push(closed);
  return Trajectory(std::move(keyframes), limits);
}

}  // namespace jubileo::motion
