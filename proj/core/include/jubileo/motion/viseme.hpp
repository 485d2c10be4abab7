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

#ifndef JUBILEO_MOTION_VISEME_HPP_
#define JUBILEO_MOTION_VISEME_HPP_

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jubileo/model/face_pose.hpp"
#include "jubileo/motion/trajectory.hpp"

namespace jubileo::motion {

class VisemeTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Character-level mouth shapes. File format:
//
//   joints = mouth_jaw mouth_corners
//   a = 0.50 0.05
//   ...
//   consonant = 0.08 0.00
//   closed = 0.00 0.00
//
// One row per vowel (a e i o u) plus `consonant` and `closed`; each row has
// one value per joint listed on the `joints` line.
struct VisemeTable {
  std::vector<std::string> joints;
  std::map<std::string, model::FacePose, std::less<>> shapes;

  static VisemeTable Parse(std::string_view text);
  static VisemeTable Load(const std::filesystem::path& path);
  // The table shipped in config/visemes.tbl, compiled in.
  static VisemeTable Default();

  const model::FacePose& Shape(std::string_view key) const;
};

// Mouth trajectory for an utterance: a closed keyframe at t = 0, one keyframe
// per character at (i + 1) / rate (vowels open per the table, other letters
// and digits near-closed, whitespace and punctuation closed) and a final
// closed keyframe at (n + 1) / rate. Keyframes that would exceed a joint's
// rate limit are pulled back to the reachable value. Empty text gives a
// single closed keyframe. Throws std::invalid_argument for rate <= 0.
Trajectory VisemeSchedule(std::string_view text, double chars_per_second, const VisemeTable& table,
                          const RateLimits& limits);

}  // namespace jubileo::motion

#endif  // JUBILEO_MOTION_VISEME_HPP_
