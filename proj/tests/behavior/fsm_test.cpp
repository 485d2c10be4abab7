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
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "jubileo/app/assets.hpp"
#include "jubileo/behavior/fsm.hpp"
#include "support/fsm_table.hpp"

namespace jubileo::behavior {
namespace {

using golden::Assets;
using golden::Events;
using golden::kNow;
using golden::Machine;
using golden::Measured;
using golden::Mode_;
using golden::States;
using golden::Table;
using golden::View;
using motion::ExpressionId;

TEST(Fsm, GoldenTransitionTable) {
  const auto rows = Table();
  if (std::getenv("JUBILEO_WRITE_GOLDEN")) {
    std::ofstream out(golden::GoldenPath(JUBILEO_TEST_DATA_DIR));
    out << "# state\tevent\tnext\treturn_to\tactions\n";
    for (const auto& r : rows) out << r << '\n';
    GTEST_SKIP() << "golden table written";
  }
  const auto frozen = golden::ReadGolden(JUBILEO_TEST_DATA_DIR);
  ASSERT_EQ(frozen.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i], frozen[i]);
}

TEST(Fsm, Deterministic) {
  for (const auto& s : States()) {
    for (const auto& e : Events()) {
      const auto a = Machine().Step(s.state, e.event, Measured());
      const auto b = Machine().Step(s.state, e.event, Measured());
      EXPECT_EQ(a.state, b.state) << s.name << " " << e.name;
      ASSERT_EQ(a.actions.size(), b.actions.size());
      for (std::size_t i = 0; i < a.actions.size(); ++i) EXPECT_EQ(ActionName(a.actions[i]), ActionName(b.actions[i]));
    }
  }
}

// Every state reachable by one or two events from the fixtures; Stop lands
// in Idle with a neutral action in one step.
TEST(Fsm, StopFromAnyReachableState) {
  std::vector<BehaviorState> frontier;
  for (const auto& s : States()) frontier.push_back(s.state);
  std::vector<BehaviorState> reached = frontier;
  for (int depth = 0; depth < 2; ++depth) {
    std::vector<BehaviorState> next;
    for (const auto& s : frontier) {
      for (const auto& e : Events()) next.push_back(Machine().Step(s, e.event, Measured()).state);
    }
    reached.insert(reached.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  ASSERT_GT(reached.size(), 500u);
  for (const auto& s : reached) {
    const auto out = Machine().Step(s, CommandEvent{grammar::Stop{}, 10.0}, Measured());
    EXPECT_EQ(out.state.current.mode, Mode::kIdle);
    EXPECT_FALSE(out.state.return_to);
    EXPECT_FALSE(out.state.busy_until);
    const bool neutral = std::any_of(out.actions.begin(), out.actions.end(),
                                     [](const Action& a) { return std::holds_alternative<Neutral>(a); });
    EXPECT_TRUE(neutral);
  }
}

TEST(Fsm, ExpressionStacksAndReturns) {
  BehaviorState s;
  s.current = Mode_(Mode::kTrackingColor, Color::kRed);
  auto out = Machine().Step(s, CommandEvent{grammar::ShowExpression{ExpressionId::kJoy}, 1.0}, Measured());
  EXPECT_EQ(out.state.current.Describe(), "PlayingExpression(Joy)");
  ASSERT_TRUE(out.state.return_to);
  EXPECT_EQ(*out.state.return_to, s.current);
  ASSERT_TRUE(out.state.busy_until);
  const double done = *out.state.busy_until;
  // Too early: nothing happens.
  auto early = Machine().Step(out.state, TrajectoryFinishedEvent{done - 0.1}, Measured());
  EXPECT_EQ(early.state, out.state);
  EXPECT_TRUE(early.actions.empty());
  auto back = Machine().Step(out.state, TrajectoryFinishedEvent{done}, Measured());
  EXPECT_EQ(back.state.current, s.current);
  EXPECT_FALSE(back.state.return_to);
}

TEST(Fsm, SpeechDuringExpressionIsQueued) {
  BehaviorState s;
  auto out = Machine().Step(s, CommandEvent{grammar::ShowExpression{ExpressionId::kJoy}, 0.0}, Measured());
  out = Machine().Step(out.state, CommandEvent{grammar::Say{"later"}, 0.1}, Measured());
  EXPECT_EQ(out.state.current.mode, Mode::kPlayingExpression);
  EXPECT_TRUE(out.actions.empty());
  out = Machine().Step(out.state, TrajectoryFinishedEvent{*out.state.busy_until}, Measured());
  EXPECT_EQ(out.state.current.Describe(), "Speaking(\"later\")");
  ASSERT_FALSE(out.actions.empty());
  EXPECT_EQ(ActionName(out.actions.back()), "speak");
}

TEST(Fsm, EmptySpeechIsOneClosedKeyframe) {
  auto out = Machine().Step(BehaviorState{}, CommandEvent{grammar::Say{""}, 0.0}, Measured());
  const Speak* speak = nullptr;
  for (const auto& a : out.actions) {
    if (auto* p = std::get_if<Speak>(&a)) speak = p;
  }
  ASSERT_NE(speak, nullptr);
  EXPECT_EQ(speak->text, "");
  EXPECT_EQ(speak->visemes.keyframes().size(), 1u);
}

TEST(Fsm, GreetsOncePerEpisode) {
  BehaviorState s;
  auto out = Machine().Step(s, CommandEvent{grammar::LookAtMe{}, 0.0}, Measured());
  int greetings = 0;
  for (int i = 0; i < 30; ++i) {
    out = Machine().Step(out.state, DetectionEvent{View(0.1 * (i + 1))}, Measured());
    for (const auto& a : out.actions) greetings += std::holds_alternative<Greet>(a);
  }
  EXPECT_EQ(greetings, 1);
  // Losing the face long enough to scan starts a new episode.
  out = Machine().Step(out.state, TickEvent{10.0}, Measured());
  out = Machine().Step(out.state, DetectionEvent{View(10.1)}, Measured());
  greetings = 0;
  for (const auto& a : out.actions) greetings += std::holds_alternative<Greet>(a);
  EXPECT_EQ(greetings, 1);
}

TEST(Fsm, ScanSweepsWithinAmplitude) {
  BehaviorState s;
  s.current = Mode_(Mode::kTrackingColor, Color::kYellow);
  const auto& cfg = Machine().config();
  double t = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  for (int i = 0; i < 30 * 20; ++i) {
    t += 1.0 / 30.0;
    auto out = Machine().Step(s, TickEvent{t}, Measured());
    s = out.state;
    for (const auto& a : out.actions) {
      if (const auto* g = std::get_if<GazeCommand>(&a)) {
        EXPECT_TRUE(g->scan);
        lo = std::min(lo, g->gaze.neck_pan);
        hi = std::max(hi, g->gaze.neck_pan);
      }
    }
  }
  EXPECT_TRUE(s.scanning);
  EXPECT_NEAR(hi, cfg.scan_amplitude, 1e-9);
  EXPECT_NEAR(lo, -cfg.scan_amplitude, 1e-9);
}

TEST(Fsm, TableExercisesEveryAction) {
  std::set<std::string> names;
  for (const auto& s : States()) {
    for (const auto& e : Events()) {
      for (const auto& a : Machine().Step(s.state, e.event, Measured()).actions) names.emplace(ActionName(a));
    }
  }
  // The lost-target sweep shows up once tracking has been blind long enough.
  BehaviorState blind;
  blind.current = Mode_(Mode::kTrackingFace);
  for (const auto& a : Machine().Step(blind, TickEvent{kNow}, Measured()).actions) names.emplace(ActionName(a));
  EXPECT_EQ(names, (std::set<std::string>{"announce", "plan_transition", "gaze_update", "scan", "speak", "greet",
                                          "reach", "neutral", "warn"}));
}

}  // namespace
}  // namespace jubileo::behavior
