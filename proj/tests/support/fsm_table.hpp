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

#ifndef JUBILEO_TESTS_SUPPORT_FSM_TABLE_HPP_
#define JUBILEO_TESTS_SUPPORT_FSM_TABLE_HPP_

// Fixture states and events for the behavior transition table. Each row
// renders as: state, event, next state, return-to mode, action names.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "jubileo/app/assets.hpp"
#include "jubileo/behavior/fsm.hpp"

namespace jubileo::behavior::golden {

using motion::ExpressionId;

inline const app::BehaviorAssets& Assets() {
  static const app::BehaviorAssets assets = [] {
    auto a = app::LoadBehaviorAssets(app::ResolveDataPath(app::kDefaultBodyModel), std::nullopt);
    a.registry.Enroll("alice", sim::EmbeddingFromName("alice"), 0.0);
    return a;
  }();
  return assets;
}

inline const BehaviorMachine& Machine() {
  static const BehaviorMachine machine(BehaviorResources{&Assets().body, &Assets().expressions,
                                                         &Assets().visemes, &Assets().gestures,
                                                         &Assets().registry});
  return machine;
}

inline model::FacePose Measured() {
  model::FacePose pose = Assets().body.NeutralFacePose();
  for (const auto* d : Assets().body.JointsInGroup(model::JointGroup::kArm)) pose.set(d->name, d->neutral_angle);
  return pose;
}

// A centered red ball within reach and alice smiling off to the side.
inline sim::DetectionSet View(double time) {
  sim::DetectionSet dets;
  dets.frame_seq = 90;
  dets.timestamp = time;
  sim::Blob ball;
  ball.label = "red";
  ball.u = 321;
  ball.v = 239;
  ball.radius_px = 30;
  ball.depth = 0.6;
  ball.object_id = "red_ball";
  sim::Blob face;
  face.kind = sim::BlobKind::kFace;
  face.label = "alice";
  face.u = 200;
  face.v = 150;
  face.radius_px = 40;
  face.depth = 1.2;
  face.embedding = sim::EmbeddingFromName("alice");
  face.expression = ExpressionId::kJoy;
  dets.blobs = {ball, face};
  return dets;
}

inline ModeState Mode_(Mode mode, std::optional<Color> color = std::nullopt) {
  ModeState m;
  m.mode = mode;
  m.color = color;
  return m;
}

struct NamedState {
  std::string name;
  BehaviorState state;
};

inline std::vector<NamedState> States() {
  std::vector<NamedState> out;
  const auto base = [] {
    BehaviorState s;
    s.last_detections = View(0.0);
    return s;
  };
  {
    out.push_back({"Idle", base()});
  }
  {
    auto s = base();
    s.current = Mode_(Mode::kTrackingColor, Color::kRed);
    out.push_back({"TrackingColor(red)", s});
  }
  {
    auto s = base();
    s.current = Mode_(Mode::kTrackingFace);
    out.push_back({"TrackingFace", s});
  }
  {
    auto s = base();
    s.current.mode = Mode::kPlayingExpression;
    s.current.expression = ExpressionId::kJoy;
    s.return_to = Mode_(Mode::kTrackingColor, Color::kRed);
    s.busy_until = 0.6;
    out.push_back({"PlayingExpression(Joy)>TrackingColor(red)", s});
  }
  {
    auto s = base();
    s.current.mode = Mode::kSpeaking;
    s.current.text = "hello";
    s.return_to = ModeState{};
    s.busy_until = 0.5;
    out.push_back({"Speaking(hello)>Idle", s});
  }
  {
    auto s = base();
    s.current = Mode_(Mode::kGrabbing, Color::kRed);
    out.push_back({"Grabbing(red)", s});
  }
  {
    auto s = base();
    s.current = Mode_(Mode::kGrabbing, Color::kRed);
    s.current.phase = GrabPhase::kReaching;
    s.busy_until = 2.0;
    out.push_back({"Grabbing(red,reaching)", s});
  }
  return out;
}

struct NamedEvent {
  std::string name;
  Event event;
};

inline constexpr double kNow = 3.0;

inline std::vector<NamedEvent> Events() {
  return {
      {"Stop", CommandEvent{grammar::Stop{}, kNow}},
      {"LookAtMe", CommandEvent{grammar::LookAtMe{}, kNow}},
      {"LookAtColor(blue)", CommandEvent{grammar::LookAtColor{Color::kBlue, std::nullopt}, kNow}},
      {"ShowExpression(Surprise)", CommandEvent{grammar::ShowExpression{ExpressionId::kSurprise}, kNow}},
      {"Say(ok)", CommandEvent{grammar::Say{"ok"}, kNow}},
      {"Mimic", CommandEvent{grammar::Mimic{}, kNow}},
      {"Grab(green)", CommandEvent{grammar::Grab{Color::kGreen}, kNow}},
      {"Detections", DetectionEvent{View(kNow)}},
      {"TrajectoryFinished", TrajectoryFinishedEvent{kNow}},
      {"Tick", TickEvent{kNow}},
  };
}

inline std::string Row(const NamedState& s, const NamedEvent& e) {
  const Outcome out = Machine().Step(s.state, e.event, Measured());
  std::ostringstream row;
  row << s.name << '\t' << e.name << '\t' << out.state.current.Describe() << '\t'
      << (out.state.return_to ? out.state.return_to->Describe() : "-") << '\t';
  if (out.actions.empty()) row << '-';
  for (std::size_t i = 0; i < out.actions.size(); ++i) row << (i ? "," : "") << ActionName(out.actions[i]);
  return row.str();
}

inline std::vector<std::string> Table() {
  std::vector<std::string> rows;
  for (const auto& s : States()) {
    for (const auto& e : Events()) rows.push_back(Row(s, e));
  }
  return rows;
}

inline std::filesystem::path GoldenPath(const std::filesystem::path& data_dir) { return data_dir / "fsm_golden.tsv"; }

// Rows of the frozen table, comments skipped.
inline std::vector<std::string> ReadGolden(const std::filesystem::path& data_dir) {
  std::ifstream in(GoldenPath(data_dir));
  std::vector<std::string> rows;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  }
  return rows;
}

}  // namespace jubileo::behavior::golden

#endif  // JUBILEO_TESTS_SUPPORT_FSM_TABLE_HPP_
