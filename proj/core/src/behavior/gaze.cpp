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

#include "jubileo/behavior/gaze.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace jubileo::behavior {

double Range::Clamp(double x) const { return std::clamp(x, min, max); }

GazeLimits GazeLimitsFromModel(const model::RobotModel& model) {
  const auto range = [&](std::string_view joint) {
    const auto& d = model.At(joint);
    return Range{d.min_angle, d.max_angle};
  };
  return {range(sim::kNeckPan), range(sim::kNeckTilt), range(sim::kEyeYawLeft), range(sim::kEyePitchLeft)};
}

double PixelError(const sim::CameraModel& camera, double u, double v) {
  return std::hypot(u - camera.cx, v - camera.cy);
}

sim::GazeState GazeUpdate(double u, double v, const sim::GazeState& gaze, const ControllerGains& gains,
                          const sim::CameraModel& camera, double dt, const GazeLimits& limits) {
  sim::GazeState out = gaze;
  if (PixelError(camera, u, v) > gains.deadband_px) {
    const double e_u = (u - camera.cx) / camera.width;
    const double e_v = (v - camera.cy) / camera.height;
    out.eye_yaw = limits.eye_yaw.Clamp(out.eye_yaw + std::clamp(gains.kp_eye * e_u, -gains.max_step, gains.max_step));
    out.eye_pitch =
        limits.eye_pitch.Clamp(out.eye_pitch + std::clamp(gains.kp_eye * e_v, -gains.max_step, gains.max_step));
  }
  const double pan = limits.neck_pan.Clamp(out.neck_pan + gains.kp_neck * out.eye_yaw * dt);
  const double tilt = limits.neck_tilt.Clamp(out.neck_tilt + gains.kp_neck * out.eye_pitch * dt);
  if (pan != out.neck_pan || tilt != out.neck_tilt) {
    // Eyes re-aim so the optical axis stays put; a roll about the axis
    // leaves every pixel's distance from the center unchanged.
    const sim::Vec3 axis = sim::ToWorldFrame(out, {0.0, 0.0, 1.0});
    const sim::Vec3 w = sim::ToCameraFrame({pan, tilt, 0.0, 0.0}, axis);
    out.eye_yaw = limits.eye_yaw.Clamp(std::atan2(w[0], w[2]));
    out.eye_pitch = limits.eye_pitch.Clamp(std::asin(std::clamp(w[1], -1.0, 1.0)));
  }
  out.neck_pan = pan;
  out.neck_tilt = tilt;
  return out;
}

std::optional<sim::Blob> SelectTarget(const sim::DetectionSet& detections, const TargetSpec& want) {
  const sim::Blob* best = nullptr;
  for (const auto& blob : detections.blobs) {
    const bool match = std::holds_alternative<AnyFace>(want)
                           ? blob.kind == sim::BlobKind::kFace
                           : blob.kind == sim::BlobKind::kColor &&
                                 blob.label == ColorName(std::get<Color>(want));
    if (!match) continue;
    if (best == nullptr ||
        std::make_tuple(-blob.radius_px, blob.label, blob.u, blob.v) <
            std::make_tuple(-best->radius_px, best->label, best->u, best->v)) {
      best = &blob;
    }
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

}  // namespace jubileo::behavior
