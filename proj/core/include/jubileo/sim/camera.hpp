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

#ifndef JUBILEO_SIM_CAMERA_HPP_
#define JUBILEO_SIM_CAMERA_HPP_

#include <optional>
#include <string_view>

#include "jubileo/model/face_pose.hpp"
#include "jubileo/model/robot_model.hpp"

namespace jubileo::sim {

using model::Vec3;

// World frame: x right, y down, z forward, origin at the camera. The camera
// turns with the neck and then the eyes; the small offsets between the
// rotation centers are ignored.
struct CameraModel {
  int width = 640;
  int height = 480;
  double focal = 525.0;
  double cx = 320.0;
  double cy = 240.0;
};

inline constexpr std::string_view kNeckPan = "neck_pan";
inline constexpr std::string_view kNeckTilt = "neck_tilt";
inline constexpr std::string_view kEyeYawLeft = "eye_yaw_left";
inline constexpr std::string_view kEyeYawRight = "eye_yaw_right";
inline constexpr std::string_view kEyePitchLeft = "eye_pitch_left";
inline constexpr std::string_view kEyePitchRight = "eye_pitch_right";

// Positive pan/yaw turns the view to the right (+x), positive tilt/pitch
// turns it down (+y).
struct GazeState {
  double neck_pan = 0.0;
  double neck_tilt = 0.0;
  double eye_yaw = 0.0;
  double eye_pitch = 0.0;

  friend bool operator==(const GazeState&, const GazeState&) = default;
};

// Reads the neck joints and the left eye; missing joints count as zero.
GazeState GazeFromPose(const model::FacePose& pose);
// Writes both eyes with the same command.
void WriteGaze(const GazeState& gaze, model::FacePose& pose);

struct Pixel {
  double u = 0.0;
  double v = 0.0;
  double depth = 0.0;  // camera-frame z
};

inline constexpr double kMinDepth = 0.01;

Vec3 ToCameraFrame(const GazeState& gaze, const Vec3& world_point);
Vec3 ToWorldFrame(const GazeState& gaze, const Vec3& camera_point);

// Nothing when the point is closer than kMinDepth in front of the camera or
// lands outside the image.
std::optional<Pixel> Project(const CameraModel& camera, const GazeState& gaze, const Vec3& world_point);

}  // namespace jubileo::sim

#endif  // JUBILEO_SIM_CAMERA_HPP_
