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
#include "jubileo/model/urdf.hpp"
#include "jubileo/motion/expression.hpp"
#include "jubileo/motion/gesture_script.hpp"
#include "jubileo/motion/planner.hpp"
#include "jubileo/motion/trajectory.hpp"
#include "jubileo/motion/viseme.hpp"
#include "support/gen.hpp"

namespace jubileo::motion {
namespace {

using model::FacePose;

const model::RobotModel& Face() {
  static const auto face = model::LoadRobotDescription(app::ResolveDataPath(app::kDefaultFaceModel));
  return face;
}

const model::RobotModel& Body() {
  static const auto body = model::LoadRobotDescription(app::ResolveDataPath(app::kDefaultBodyModel));
  return body;
}

const ExpressionLibrary& Library() {
  static const auto lib = ExpressionLibrary::Load(app::ResolveDataPath("config/expressions.tbl"), Face());
  return lib;
}

double LInf(const FacePose& a, const FacePose& b) {
  double d = 0.0;
  for (const auto& [name, v] : a.angles) d = std::max(d, std::abs(v - *b.get(name)));
  return d;
}

FacePose Pose(std::initializer_list<std::pair<const std::string, double>> items) {
  FacePose p;
  for (const auto& [k, v] : items) p.angles[k] = v;
  return p;
}

// Largest |delta angle| / delta t over adjacent keyframes, minus the limit.
double WorstRateExcess(const Trajectory& t) {
  double worst = -1e300;
  const auto& keys = t.keyframes();
  for (std::size_t i = 1; i < keys.size(); ++i) {
    const double dt = keys[i].time - keys[i - 1].time;
    for (const auto& [name, v] : keys[i].pose.angles) {
      const double speed = std::abs(v - *keys[i - 1].pose.get(name)) / dt;
      worst = std::max(worst, speed - t.rate_limits().For(name));
    }
  }
  return worst;
}

TEST(Expressions, NamesParse) {
  for (auto id : kAllExpressions) EXPECT_EQ(ParseExpressionId(ExpressionName(id)), id);
  EXPECT_EQ(ParseExpressionId("thinking"), ExpressionId::kThinking);
  EXPECT_FALSE(ParseExpressionId("Joy"));
  EXPECT_FALSE(ParseExpressionId("boredom"));
}

TEST(Expressions, NeutralIsModelNeutral) {
  EXPECT_EQ(Library().Pose(ExpressionId::kNeutral), Face().NeutralFacePose());
}

TEST(Expressions, EveryPoseCoversTheFaceWithinLimits) {
  for (auto id : kAllExpressions) {
    const auto& pose = Library().Pose(id);
    EXPECT_EQ(pose.size(), 12u) << ExpressionName(id);
    for (const auto& [name, v] : pose.angles) {
      const auto& j = Face().At(name);
      EXPECT_GE(v, j.min_angle) << name;
      EXPECT_LE(v, j.max_angle) << name;
    }
  }
}

TEST(Expressions, PairwiseDistinct) {
  for (auto a : kAllExpressions) {
    for (auto b : kAllExpressions) {
      if (a == b) continue;
      EXPECT_GE(LInf(Library().Pose(a), Library().Pose(b)), 0.1) << ExpressionName(a) << " vs " << ExpressionName(b);
    }
  }
}

TEST(Expressions, AngerAndSadnessOpposeBrowRotation) {
  const auto& anger = Library().Pose(ExpressionId::kAnger);
  const auto& sad = Library().Pose(ExpressionId::kSadness);
  for (const char* j : {"brow_roll_left", "brow_roll_right"}) {
    EXPECT_LT(*anger.get(j), 0.0) << j;
    EXPECT_GT(*sad.get(j), 0.0) << j;
  }
}

TEST(Expressions, TableErrors) {
  EXPECT_THROW(ExpressionLibrary::Parse("[joy]\nnot_a_joint = 0.1\n", Face()), ExpressionTableError);
  EXPECT_THROW(ExpressionLibrary::Parse("[neutral]\nmouth_jaw = 0.1\n", Face()), ExpressionTableError);
  EXPECT_THROW(ExpressionLibrary::Parse("[boredom]\n", Face()), ExpressionTableError);
  EXPECT_THROW(ExpressionLibrary::Parse("mouth_jaw = 0.1\n", Face()), ExpressionTableError);
}

TEST(Blend, Endpoints) {
  const auto a = Pose({{"x", 0.2}, {"y", -1.0}});
  const auto b = Pose({{"x", 0.9}, {"y", 0.5}});
  EXPECT_EQ(Blend(a, b, 0.0), a);
  EXPECT_EQ(Blend(a, b, 1.0), b);
  EXPECT_EQ(Blend(a, a, 0.37), a);
  EXPECT_THROW(Blend(a, Pose({{"x", 0.0}}), 0.5), BlendError);
  EXPECT_THROW(Blend(a, b, 1.5), BlendError);
}

TEST(Blend, LinearOnRandomPoses) {
  testing::Gen gen(51);
  for (int i = 0; i < 1000; ++i) {
    const auto a = Pose({{"p", gen.Real(-3, 3)}, {"q", gen.Real(-3, 3)}});
    const auto b = Pose({{"p", gen.Real(-3, 3)}, {"q", gen.Real(-3, 3)}});
    const double t = gen.Real(0, 1);
    const auto c = Blend(a, b, t);
    for (const char* j : {"p", "q"}) {
      ASSERT_NEAR(*c.get(j), (1 - t) * *a.get(j) + t * *b.get(j), 1e-12);
    }
  }
}

TEST(Smoothstep, PeakSlope) {
  EXPECT_EQ(Smoothstep(0.0), 0.0);
  EXPECT_EQ(Smoothstep(1.0), 1.0);
  EXPECT_DOUBLE_EQ(Smoothstep(0.5), 0.5);
  const double h = 1e-6;
  EXPECT_NEAR((Smoothstep(0.5 + h) - Smoothstep(0.5 - h)) / (2 * h), kSmoothstepPeakSlope, 1e-9);
  double max_slope = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double u = i / 1000.0;
    max_slope = std::max(max_slope, (Smoothstep(u + 1e-3) - Smoothstep(u)) / 1e-3);
  }
  EXPECT_LE(max_slope, 1.5 + 1e-6);
}

TEST(PlanTransition, HoldWhenEqual) {
  const auto a = Pose({{"j", 0.3}});
  const auto plan = PlanTransition(a, a, 0.8, RateLimits{});
  EXPECT_EQ(plan.stretch, 0.0);
  EXPECT_EQ(plan.trajectory.Sample(0.0), a);
  EXPECT_EQ(plan.trajectory.Sample(10.0), a);
}

TEST(PlanTransition, NoStretchWithinLimit) {
  RateLimits limits;
  limits.per_joint["j"] = 2.0;
  const auto plan = PlanTransition(Pose({{"j", 0.0}}), Pose({{"j", 1.0}}), 1.0, limits);
  EXPECT_EQ(plan.stretch, 0.0);
  EXPECT_DOUBLE_EQ(plan.trajectory.duration(), 1.0);
  EXPECT_LE(WorstRateExcess(plan.trajectory), 1e-9);
}

TEST(PlanTransition, StretchesToPeakSlopeBound) {
  RateLimits limits;
  limits.per_joint["j"] = 1.0;
  const auto plan = PlanTransition(Pose({{"j", 0.0}}), Pose({{"j", 1.0}}), 1.0, limits);
  EXPECT_NEAR(plan.trajectory.duration(), 1.5, 1e-12);
  EXPECT_NEAR(plan.stretch, 0.5, 1e-12);
  EXPECT_LE(WorstRateExcess(plan.trajectory), 1e-9);
}

TEST(PlanTransition, KeyframesAtControlRate) {
  const auto plan = PlanTransition(Pose({{"j", 0.0}}), Pose({{"j", 0.2}}), 1.0, RateLimits{});
  const auto& keys = plan.trajectory.keyframes();
  EXPECT_EQ(keys.size(), 31u);
  EXPECT_NEAR(keys[1].time, 1.0 / 30.0, 1e-12);
}

TEST(PlanTransition, EndpointFidelityAndRateSoundness) {
  testing::Gen gen(61);
  const auto limits = RateLimitsFromModel(Face());
  const auto names = [] {
    std::vector<std::string> out;
    for (const auto* j : Face().ChannelJoints()) out.push_back(j->name);
    return out;
  }();
  for (int i = 0; i < 1000; ++i) {
    FacePose a;
    FacePose b;
    for (const auto& n : names) {
      const auto& j = Face().At(n);
      a.angles[n] = gen.Real(j.min_angle, j.max_angle);
      b.angles[n] = gen.Real(j.min_angle, j.max_angle);
    }
    const auto plan = PlanTransition(a, b, gen.Real(0.05, 2.0), limits);
    ASSERT_EQ(plan.trajectory.Sample(0.0), a);
    ASSERT_EQ(plan.trajectory.Sample(plan.trajectory.duration()), b);
    ASSERT_EQ(plan.trajectory.Sample(plan.trajectory.duration() + 1.0), b);
    ASSERT_LE(WorstRateExcess(plan.trajectory), 1e-9) << "case " << i;
  }
}

TEST(Trajectory, SampleIsPiecewiseLinear) {
  const Trajectory t({{0.0, Pose({{"j", 0.0}})}, {1.0, Pose({{"j", 1.0}})}}, RateLimits{});
  EXPECT_EQ(*t.Sample(0.25).get("j"), 0.25);
  EXPECT_EQ(*t.Sample(1.0).get("j"), 1.0);
  EXPECT_EQ(*t.Sample(7.0).get("j"), 1.0);
  EXPECT_EQ(*t.Sample(-1.0).get("j"), 0.0);
}

TEST(Trajectory, RejectsBadKeyframes) {
  EXPECT_THROW(Trajectory({}, RateLimits{}), TrajectoryError);
  EXPECT_THROW(Trajectory({{0.5, Pose({{"j", 0}})}, {0.5, Pose({{"j", 1}})}}, RateLimits{}), TrajectoryError);
  EXPECT_THROW(Trajectory({{0.0, Pose({{"j", 0}})}, {1.0, Pose({{"k", 1}})}}, RateLimits{}), TrajectoryError);
  EXPECT_THROW(Trajectory({{-1.0, Pose({{"j", 0}})}}, RateLimits{}), TrajectoryError);
}

TEST(Visemes, EmptyTextIsOneClosedKeyframe) {
  const auto t = VisemeSchedule("", 12.0, VisemeTable::Default(), RateLimitsFromModel(Face()));
  ASSERT_EQ(t.keyframes().size(), 1u);
  EXPECT_EQ(t.keyframes()[0].pose, VisemeTable::Default().Shape("closed"));
}

TEST(Visemes, ThreeVowels) {
  RateLimits fast;
  fast.default_limit = 100.0;
  const auto& table = VisemeTable::Default();
  const auto t = VisemeSchedule("aaa", 10.0, table, fast);
  const auto& keys = t.keyframes();
  ASSERT_EQ(keys.size(), 5u);
  for (int i = 1; i <= 3; ++i) {
    EXPECT_NEAR(keys[i].time, 0.1 * i, 1e-12);
    EXPECT_EQ(keys[i].pose, table.Shape("a"));
  }
  EXPECT_EQ(keys[4].pose, table.Shape("closed"));
}

TEST(Visemes, DurationCountsCharactersPlusClose) {
  const auto limits = RateLimitsFromModel(Face());
  for (double r : {5.0, 10.0, 12.0, 20.0}) {
    EXPECT_NEAR(VisemeSchedule("hello world", r, VisemeTable::Default(), limits).duration(), 12.0 / r, 1e-12);
  }
}

TEST(Visemes, DeterministicAndRateLimited) {
  const auto limits = RateLimitsFromModel(Face());
  const auto a = VisemeSchedule("Nice to meet you, Alice!", 12.0, VisemeTable::Default(), limits);
  const auto b = VisemeSchedule("Nice to meet you, Alice!", 12.0, VisemeTable::Default(), limits);
  EXPECT_EQ(a, b);
  EXPECT_LE(WorstRateExcess(a), 1e-9);
  EXPECT_THROW(VisemeSchedule("x", 0.0, VisemeTable::Default(), limits), std::invalid_argument);
}

TEST(Visemes, BundledTableMatchesDefault) {
  const auto loaded = VisemeTable::Load(app::ResolveDataPath("config/visemes.tbl"));
  EXPECT_EQ(loaded.joints, VisemeTable::Default().joints);
  EXPECT_EQ(loaded.shapes, VisemeTable::Default().shapes);
  EXPECT_THROW(VisemeTable::Parse("a = 0.1 0.2\n"), VisemeTableError);
}

TEST(Gestures, BundledScriptHasReachSet) {
  const auto gestures = LoadGestureScriptFile(app::ResolveDataPath("config/gestures.kfs"), Body());
  for (const char* name : {"wave", "reach_forward", "grab_close", "retract"}) {
    ASSERT_TRUE(gestures.contains(name)) << name;
    EXPECT_FALSE(gestures.at(name).FindRateViolation()) << name;
  }
}

TEST(Gestures, EmptyDocument) { EXPECT_TRUE(LoadGestureScript("", Body()).empty()); }

TEST(Gestures, RepeatedTimeIsError) {
  const char* text =
      "gesture nod\n"
      "key 0.0 r_elbow=0.0\n"
      "key 0.5 r_elbow=0.2\n"
      "key 0.5 r_elbow=0.3\n"
      "end\n";
  try {
    LoadGestureScript(text, Body());
    FAIL();
  } catch (const ScriptError& e) {
    EXPECT_EQ(e.gesture(), "nod");
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(Gestures, UnknownJointIsError) {
  EXPECT_THROW(LoadGestureScript("gesture g\nkey 0 tail=0.1\nend\n", Body()), ScriptError);
}

TEST(Gestures, JointsCarryForward) {
  const auto g = LoadGestureScript(
      "gesture g\nkey 0 r_elbow=0.0\nkey 1 r_shoulder_pitch=0.5\nkey 2 r_elbow=0.4\nend\n", Body());
  const auto& keys = g.at("g").keyframes();
  ASSERT_EQ(keys.size(), 3u);
  EXPECT_EQ(keys[0].pose.get("r_shoulder_pitch"), 0.5);
  EXPECT_EQ(keys[1].pose.get("r_elbow"), 0.0);
  EXPECT_EQ(keys[2].pose.get("r_shoulder_pitch"), 0.5);
}

}  // namespace
}  // namespace jubileo::motion
