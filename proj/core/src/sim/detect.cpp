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

#include "jubileo/sim/detect.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace jubileo::sim {
namespace {

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : rng_(seed) {}

  double Next() {
    if (spare_) {
      const double s = *spare_;
      spare_.reset();
      return s;
    }
    const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    return r * std::cos(2.0 * M_PI * u2);
  }

 private:
  std::mt19937_64 rng_;
  std::optional<double> spare_;
};

}  // namespace

DetectionSet Detect(const std::vector<SceneObject>& objects, const std::vector<AvatarState>& avatars,
                    const GazeState& gaze, const CameraModel& camera, const DetectorNoise& noise,
                    std::uint64_t seed, std::uint64_t frame_seq, double timestamp) {
  DetectionSet out;
  out.frame_seq = frame_seq;
  out.timestamp = timestamp;
  Gaussian gauss(SplitMix(seed ^ SplitMix(frame_seq)));
  const auto place = [&](Blob& blob, const Pixel& p, double radius) {
    blob.u = std::clamp(p.u + noise.pixel_sigma * gauss.Next(), 0.0, static_cast<double>(camera.width));
    blob.v = std::clamp(p.v + noise.pixel_sigma * gauss.Next(), 0.0, static_cast<double>(camera.height));
    blob.depth = p.depth;
    blob.radius_px = camera.focal * radius / p.depth;
  };
  for (const auto& o : objects) {
    const auto p = Project(camera, gaze, o.position);
    if (!p) continue;
    Blob blob;
    blob.kind = BlobKind::kColor;
    blob.label = std::string(ColorName(o.color));
    blob.object_id = o.id;
    place(blob, *p, o.radius);
    out.blobs.push_back(std::move(blob));
  }
  for (const auto& a : avatars) {
    const auto p = Project(camera, gaze, a.head_position);
    if (!p) continue;
    Blob blob;
    blob.kind = BlobKind::kFace;
    blob.label = a.id;
    blob.expression = a.expression;
    place(blob, *p, kFaceRadius);
    Embedding e = a.embedding;
    for (double& x : e) x += noise.embedding_sigma * gauss.Next();
    blob.embedding = Norm(e) > 0.0 ? Normalized(e) : a.embedding;
    out.blobs.push_back(std::move(blob));
  }
  return out;
}

DetectionSet Detect(const World& world, const CameraModel& camera, const DetectorNoise& noise,
                    std::uint64_t seed) {
  return Detect(world.objects(), world.avatars(), world.gaze(), camera, noise, seed, world.frame_seq(),
                world.time());
}

}  // namespace jubileo::sim
