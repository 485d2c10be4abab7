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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "jubileo/app/assets.hpp"
#include "jubileo/behavior/gaze.hpp"
#include "jubileo/model/urdf.hpp"
#include "support/closed_loop.hpp"
#include "support/gen.hpp"

namespace jubileo::behavior {
namespace {

const model::RobotModel& Body() {
  static const auto body = model::LoadRobotDescription(app::ResolveDataPath(app::kDefaultBodyModel));
  return body;
}

constexpr sim::DetectorNoise kNoNoise{0.0, 0.0};
constexpr double kDt = 1.0 / 30.0;

sim::Blob ColorBlob(Color c, double radius, double u = 320, double v = 240) {
  sim::Blob b;
  b.label = std::string(ColorName(c));
  b.u = u;
  b.v = v;
  b.radius_px = radius;
  return b;
}

sim::Blob FaceBlob(std::string id, double radius) {
  sim::Blob b;
  b.kind = sim::BlobKind::kFace;
  b.label = std::move(id);
  b.radius_px = radius;
  return b;
}

TEST(SelectTarget, Examples) {
  sim::DetectionSet none;
  EXPECT_FALSE(SelectTarget(none, Color::kRed));

  sim::DetectionSet mixed;
  mixed.blobs = {ColorBlob(Color::kBlue, 30), ColorBlob(Color::kRed, 10, 100, 100), ColorBlob(Color::kBlue, 5)};
  auto got = SelectTarget(mixed, Color::kRed);
  ASSERT_TRUE(got);
  EXPECT_EQ(got->u, 100);
  EXPECT_FALSE(SelectTarget(mixed, AnyFace{}));

  sim::DetectionSet two_red;
  two_red.blobs = {ColorBlob(Color::kRed, 12, 10, 10), ColorBlob(Color::kRed, 20, 50, 50)};
  got = SelectTarget(two_red, Color::kRed);
  ASSERT_TRUE(got);
  EXPECT_EQ(got->radius_px, 20);
}

TEST(SelectTarget, FaceTieBreaksByLabel) {
  sim::DetectionSet dets;
  dets.blobs = {FaceBlob("zed", 15), FaceBlob("bob", 15), FaceBlob("amy", 14), ColorBlob(Color::kRed, 40)};
  const auto got = SelectTarget(dets, AnyFace{});
  ASSERT_TRUE(got);
  EXPECT_EQ(got->label, "bob");
}

TEST(SelectTarget, IndependentOfBlobOrder) {
  testing::Gen gen(301);
  for (int trial = 0; trial < 200; ++trial) {
    sim::DetectionSet dets;
    const int n = gen.Int(1, 8);
    for (int i = 0; i < n; ++i) {
      auto b = ColorBlob(static_cast<Color>(gen.Int(0, 3)), gen.Int(5, 8), gen.Real(0, 640), gen.Real(0, 480));
      dets.blobs.push_back(b);
    }
    const auto want = static_cast<Color>(gen.Int(0, 3));
    const auto first = SelectTarget(dets, want);
    std::shuffle(dets.blobs.begin(), dets.blobs.end(), gen.engine());
    EXPECT_EQ(first, SelectTarget(dets, want));
    if (first) {
      for (const auto& b : dets.blobs) {
        if (b.label == first->label) EXPECT_LE(b.radius_px, first->radius_px);
      }
    }
  }
}

TEST(GazeUpdate, CenteredTargetHolds) {
  const auto limits = GazeLimitsFromModel(Body());
  const sim::GazeState gaze{0.3, -0.2, 0.0, 0.0};
  EXPECT_EQ(GazeUpdate(320, 240, gaze, {}, {}, kDt, limits), gaze);
  // Anywhere inside the deadband holds too.
  EXPECT_EQ(GazeUpdate(323, 244, gaze, {}, {}, kDt, limits), gaze);
}

TEST(GazeUpdate, StepMagnitudeAndSign) {
  const auto limits = GazeLimitsFromModel(Body());
  ControllerGains gains;
  gains.max_step = 1.0;
  gains.kp_neck = 0.0;
  const sim::CameraModel cam;
  // e_u = 0.25.
  const double u = cam.cx + 0.25 * cam.width;
  const auto next = GazeUpdate(u, cam.cy, {}, gains, cam, kDt, limits);
  EXPECT_NEAR(std::abs(next.eye_yaw), 0.1, 1e-12);
  EXPECT_EQ(next.eye_pitch, 0.0);

  // One simulated frame as the sign oracle: the target lands closer to cx.
  const sim::Vec3 target = sim::ToWorldFrame({}, {(u - cam.cx) / cam.focal, 0.0, 1.0});
  const auto before = sim::Project(cam, {}, target);
  const auto after = sim::Project(cam, next, target);
  ASSERT_TRUE(before && after);
  EXPECT_NEAR(before->u, u, 1e-9);
  EXPECT_LT(std::abs(after->u - cam.cx), std::abs(before->u - cam.cx));
}

TEST(GazeUpdate, StepClampedAndLimited) {
  const auto limits = GazeLimitsFromModel(Body());
  testing::Gen gen(302);
  const ControllerGains gains;
  for (int i = 0; i < 500; ++i) {
    const sim::GazeState g{gen.Real(-1, 1), gen.Real(-0.8, 0.8), gen.Real(-0.5, 0.5), gen.Real(-0.5, 0.5)};
    const auto next = GazeUpdate(gen.Real(0, 640), gen.Real(0, 480), g, gains, {}, kDt, limits);
    // The optical axis turns by at most one eye step on each axis.
    const auto a = sim::ToWorldFrame(g, {0, 0, 1});
    const auto b = sim::ToWorldFrame(next, {0, 0, 1});
    const double turn = std::acos(std::clamp(a[0] * b[0] + a[1] * b[1] + a[2] * b[2], -1.0, 1.0));
    EXPECT_LE(turn, 2 * gains.max_step + 1e-9);
    EXPECT_LE(std::abs(next.eye_yaw), limits.eye_yaw.max);
    EXPECT_LE(std::abs(next.eye_pitch), limits.eye_pitch.max);
    EXPECT_GE(next.neck_pan, limits.neck_pan.min);
    EXPECT_LE(next.neck_pan, limits.neck_pan.max);
    EXPECT_GE(next.neck_tilt, limits.neck_tilt.min);
    EXPECT_LE(next.neck_tilt, limits.neck_tilt.max);
  }
}

TEST(GazeLoop, ConvergesWithin100TicksFromRandomPlacements) {
  testing::Gen gen(303);
  for (int i = 0; i < 50; ++i) {
    const auto placement = testing::RandomPlacement(gen);
    const auto trace = testing::RunGazeLoop(Body(), placement, 100, sim::DetectorNoise{}, 1000 + i);
    EXPECT_GE(trace.ticks_to_deadband, 0) << "placement " << i;
  }
}

TEST(GazeLoop, NoiseFreeErrorNonIncreasingAfterFiveTicks) {
  testing::Gen gen(304);
  for (int i = 0; i < 50; ++i) {
    const auto placement = testing::RandomPlacement(gen);
    const auto trace = testing::RunGazeLoop(Body(), placement, 100, kNoNoise, 0);
    for (std::size_t t = 6; t < trace.error_px.size(); ++t) {
      ASSERT_GE(trace.error_px[t], 0.0) << "placement " << i << " tick " << t;
      EXPECT_LE(trace.error_px[t], trace.error_px[t - 1] + 1e-6) << "placement " << i << " tick " << t;
    }
  }
}

TEST(GazeLoop, NeckAbsorbsEyeDeflection) {
  testing::Gen gen(305);
  for (int i = 0; i < 10; ++i) {
    const auto placement = testing::RandomPlacement(gen);
    const auto trace = testing::RunGazeLoop(Body(), placement, 300, kNoNoise, 0);
    ASSERT_GE(trace.ticks_to_deadband, 0);
    const auto& last = trace.gaze.back();
    EXPECT_LT(std::abs(last.eye_yaw), 0.05) << "placement " << i;
    EXPECT_LT(std::abs(last.eye_pitch), 0.05) << "placement " << i;
    for (std::size_t t = trace.ticks_to_deadband; t < trace.error_px.size(); ++t) {
      EXPECT_LE(trace.error_px[t], ControllerGains{}.deadband_px) << "placement " << i << " tick " << t;
    }
  }
}

}  // namespace
}  // namespace jubileo::behavior
