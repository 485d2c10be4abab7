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

#ifndef JUBILEO_SIM_DETECT_HPP_
#define JUBILEO_SIM_DETECT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jubileo/motion/expression.hpp"
#include "jubileo/sim/camera.hpp"
#include "jubileo/sim/world.hpp"

namespace jubileo::sim {

enum class BlobKind { kColor, kFace };

struct Blob {
  BlobKind kind = BlobKind::kColor;
  std::string label;  // color name, or avatar id for faces
  double u = 0.0;
  double v = 0.0;
  double radius_px = 0.0;
  double depth = 0.0;
  std::optional<Embedding> embedding;                 // faces only
  std::optional<motion::ExpressionId> expression;     // faces only
  std::optional<std::string> object_id;               // color blobs only

  friend bool operator==(const Blob&, const Blob&) = default;
};

struct DetectionSet {
  std::uint64_t frame_seq = 0;
  double timestamp = 0.0;
  std::vector<Blob> blobs;

  friend bool operator==(const DetectionSet&, const DetectionSet&) = default;
};

struct DetectorNoise {
  double pixel_sigma = 1.0;
  double embedding_sigma = 0.05;
};

// Deterministic in (world state, gaze, camera, noise, seed, frame_seq).
// Color blobs come first in scene order, then faces.
DetectionSet Detect(const World& world, const CameraModel& camera, const DetectorNoise& noise,
                    std::uint64_t seed);

// The same generator on explicit inputs.
DetectionSet Detect(const std::vector<SceneObject>& objects, const std::vector<AvatarState>& avatars,
                    const GazeState& gaze, const CameraModel& camera, const DetectorNoise& noise,
                    std::uint64_t seed, std::uint64_t frame_seq, double timestamp);

}  // namespace jubileo::sim

#endif  // JUBILEO_SIM_DETECT_HPP_
