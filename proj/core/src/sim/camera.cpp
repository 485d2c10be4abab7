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

#include "jubileo/sim/camera.hpp"

#include <Eigen/Geometry>

namespace jubileo::sim {
namespace {

Eigen::Matrix3d CameraRotation(const GazeState& g) {
  const Eigen::Vector3d x = Eigen::Vector3d::UnitX();
  const Eigen::Vector3d y = Eigen::Vector3d::UnitY();
  return (Eigen::AngleAxisd(g.neck_pan, y) * Eigen::AngleAxisd(-g.neck_tilt, x) *
          Eigen::AngleAxisd(g.eye_yaw, y) * Eigen::AngleAxisd(-g.eye_pitch, x))
      .toRotationMatrix();
}

}  // namespace

GazeState GazeFromPose(const model::FacePose& pose) {
  return {pose.get(kNeckPan).value_or(0.0), pose.get(kNeckTilt).value_or(0.0),
          pose.get(kEyeYawLeft).value_or(0.0), pose.get(kEyePitchLeft).value_or(0.0)};
}

void WriteGaze(const GazeState& gaze, model::FacePose& pose) {
  pose.set(kNeckPan, gaze.neck_pan);
  pose.set(kNeckTilt, gaze.neck_tilt);
  pose.set(kEyeYawLeft, gaze.eye_yaw);
  pose.set(kEyeYawRight, gaze.eye_yaw);
  pose.set(kEyePitchLeft, gaze.eye_pitch);
  pose.set(kEyePitchRight, gaze.eye_pitch);
}

Vec3 ToCameraFrame(const GazeState& gaze, const Vec3& p) {
  const Eigen::Vector3d c = CameraRotation(gaze).transpose() * Eigen::Vector3d(p[0], p[1], p[2]);
  return {c.x(), c.y(), c.z()};
}

Vec3 ToWorldFrame(const GazeState& gaze, const Vec3& p) {
  const Eigen::Vector3d w = CameraRotation(gaze) * Eigen::Vector3d(p[0], p[1], p[2]);
  return {w.x(), w.y(), w.z()};
}

std::optional<Pixel> Project(const CameraModel& camera, const GazeState& gaze, const Vec3& world_point) {
  const Vec3 c = ToCameraFrame(gaze, world_point);
  if (c[2] <= kMinDepth) return std::nullopt;
  const double u = camera.cx + camera.focal * c[0] / c[2];
  const double v = camera.cy + camera.focal * c[1] / c[2];
  if (u < 0.0 || u > camera.width || v < 0.0 || v > camera.height) return std::nullopt;
  return Pixel{u, v, c[2]};
}

}  // namespace jubileo::sim
