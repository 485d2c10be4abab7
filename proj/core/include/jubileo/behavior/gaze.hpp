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

#ifndef JUBILEO_BEHAVIOR_GAZE_HPP_
#define JUBILEO_BEHAVIOR_GAZE_HPP_

#include <optional>
#include <string>
#include <variant>

#include "jubileo/common/color.hpp"
#include "jubileo/model/robot_model.hpp"
#include "jubileo/sim/camera.hpp"
#include "jubileo/sim/detect.hpp"

namespace jubileo::behavior {

struct ControllerGains {
  double kp_eye = 0.4;       // rad per unit of normalized pixel error
  double kp_neck = 1.5;      // 1/s, rate at which the neck takes over eye deflection
  double deadband_px = 5.0;
  double max_step = 0.05;    // rad per tick for each eye axis
};

struct Range {
  double min = 0.0;
  double max = 0.0;
  double Clamp(double x) const;
};

struct GazeLimits {
  Range neck_pan{-1.0, 1.0};
  Range neck_tilt{-0.8, 0.8};
  Range eye_yaw{-0.5, 0.5};
  Range eye_pitch{-0.5, 0.5};
};

// Reads the neck and left eye limits; throws std::out_of_range when absent.
GazeLimits GazeLimitsFromModel(const model::RobotModel& model);

double PixelError(const sim::CameraModel& camera, double u, double v);

// One control tick. Outside the deadband the eyes step toward the target
// (at most max_step per axis). In every tick the neck absorbs
// kp_neck * eye * dt of the eye deflection and the eyes counter-rotate to
// keep the optical axis fixed, so inside the deadband the line of sight
// holds while the eyes recenter.
sim::GazeState GazeUpdate(double u, double v, const sim::GazeState& gaze, const ControllerGains& gains,
                          const sim::CameraModel& camera, double dt, const GazeLimits& limits);

struct AnyFace {
  friend bool operator==(const AnyFace&, const AnyFace&) = default;
};
using TargetSpec = std::variant<Color, AnyFace>;

// Largest matching blob; ties go to the lexicographically smaller label,
// then to the smaller (u, v).
std::optional<sim::Blob> SelectTarget(const sim::DetectionSet& detections, const TargetSpec& want);

}  // namespace jubileo::behavior

#endif  // JUBILEO_BEHAVIOR_GAZE_HPP_
