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

#ifndef JUBILEO_BEHAVIOR_FSM_HPP_
#define JUBILEO_BEHAVIOR_FSM_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jubileo/behavior/gaze.hpp"
#include "jubileo/behavior/identity.hpp"
#include "jubileo/common/color.hpp"
#include "jubileo/grammar/command.hpp"
#include "jubileo/model/face_pose.hpp"
#include "jubileo/model/robot_model.hpp"
#include "jubileo/motion/expression.hpp"
#include "jubileo/motion/gesture_script.hpp"
#include "jubileo/motion/trajectory.hpp"
#include "jubileo/motion/viseme.hpp"
#include "jubileo/sim/camera.hpp"
#include "jubileo/sim/detect.hpp"
#include "jubileo/sim/world.hpp"

namespace jubileo::behavior {

enum class Mode { kIdle, kTrackingColor, kTrackingFace, kPlayingExpression, kSpeaking, kGrabbing };
enum class GrabPhase { kApproach, kReaching };

std::string_view ModeName(Mode mode);

struct ModeState {
  Mode mode = Mode::kIdle;
  std::optional<Color> color;                      // TrackingColor, Grabbing
  std::optional<motion::ExpressionId> expression;  // PlayingExpression
  std::string text;                                // Speaking
  GrabPhase phase = GrabPhase::kApproach;          // Grabbing

  bool tracking() const;
  // "red", "joy", the utterance, or nothing.
  std::optional<std::string> Detail() const;
  // e.g. "TrackingColor(red)".
  std::string Describe() const;

  friend bool operator==(const ModeState&, const ModeState&) = default;
};

struct BehaviorState {
  ModeState current;
  // Mode resumed when an expression or utterance finishes.
  std::optional<ModeState> return_to;
  double entered_at = 0.0;
  // End time of the face or arm motion the current mode waits on.
  std::optional<double> busy_until;
  std::optional<std::string> pending_say;
  // Target bookkeeping for the tracking modes.
  double last_seen = 0.0;
  std::optional<std::string> target;
  std::optional<double> error_px;
  bool scanning = false;
  int scan_direction = 1;
  double scan_pan = 0.0;
  bool greeted = false;
  std::optional<double> last_tick;
  std::optional<sim::DetectionSet> last_detections;

  friend bool operator==(const BehaviorState&, const BehaviorState&) = default;
};

struct CommandEvent {
  grammar::CommandAst command;
  double time = 0.0;
};
struct DetectionEvent {
  sim::DetectionSet detections;
};
struct TrajectoryFinishedEvent {
  double time = 0.0;
};
struct TickEvent {
  double time = 0.0;
};
using Event = std::variant<CommandEvent, DetectionEvent, TrajectoryFinishedEvent, TickEvent>;

// Mode changes, including grab phase changes.
struct Announce {};
// Face move to an expression.
struct PlanTransition {
  motion::ExpressionId expression;
  motion::Trajectory trajectory;
};
// Neck and eye command; `scan` marks the lost-target sweep.
struct GazeCommand {
  sim::GazeState gaze;
  bool scan = false;
};
// /speech/say text plus the mouth trajectory.
struct Speak {
  std::string text;
  motion::Trajectory visemes;
};
struct Greet {
  IdentityMatch match;
};
struct Reach {
  sim::JointCommand arm;
};
// Face, neck and arm back to neutral; opens the hand.
struct Neutral {
  motion::Trajectory face;
  sim::JointCommand arm;
};
struct Warn {
  std::string message;
};
using Action = std::variant<Announce, PlanTransition, GazeCommand, Speak, Greet, Reach, Neutral, Warn>;

// "announce", "plan_transition", "gaze_update", "scan", "speak", "greet",
// "reach", "neutral", "warn".
std::string_view ActionName(const Action& action);

struct Outcome {
  BehaviorState state;
  std::vector<Action> actions;
};

struct BehaviorConfig {
  ControllerGains gains;
  sim::CameraModel camera;
  double expression_duration = 0.6;  // s, before any stretch
  double neutral_duration = 1.0;
  double speech_rate = 12.0;         // characters per second
  double lost_timeout = 2.0;         // s without the target before scanning
  double scan_amplitude = 0.4;       // rad
  double scan_speed = 0.2;           // rad/s
  double reach_depth = 0.8;          // m, farthest target the arm is sent for
};

// Resources the transition function reads. All pointers must outlive the
// machine.
struct BehaviorResources {
  const model::RobotModel* body = nullptr;
  const motion::ExpressionLibrary* expressions = nullptr;
  const motion::VisemeTable* visemes = nullptr;
  const motion::GestureMap* gestures = nullptr;  // needs reach_forward, grab_close, retract
  const IdentityRegistry* registry = nullptr;
};

// The behavior transition function. Step is total and deterministic in
// (state, event, measured joints). While the arm is reaching only Stop is
// accepted.
class BehaviorMachine {
 public:
  // Throws std::invalid_argument when a resource is missing or the gesture
  // map lacks a reach gesture.
  BehaviorMachine(BehaviorResources resources, BehaviorConfig config = {});

  Outcome Step(const BehaviorState& state, const Event& event, const model::FacePose& measured) const;

  const BehaviorConfig& config() const { return config_; }
  // The concatenated reach, close and retract motion with its grip event.
  const sim::JointCommand& reach_command() const { return reach_; }

 private:
  struct Context;

  void OnCommand(Context& c, const grammar::CommandAst& command, double time) const;
  void OnDetections(Context& c, const sim::DetectionSet& detections) const;
  void OnFinished(Context& c, double time) const;
  void OnTick(Context& c, double time) const;

  void Enter(Context& c, ModeState next, double time) const;
  void StartExpression(Context& c, motion::ExpressionId id, double time) const;
  void StartSpeech(Context& c, const std::string& text, double time) const;
  void Track(Context& c, const sim::DetectionSet& detections, const TargetSpec& want) const;
  std::optional<TargetSpec> CurrentTarget(const BehaviorState& state) const;

  BehaviorResources res_;
  BehaviorConfig config_;
  GazeLimits limits_;
  motion::RateLimits rates_;
  sim::JointCommand reach_;
  double reach_duration_ = 0.0;
};

}  // namespace jubileo::behavior

#endif  // JUBILEO_BEHAVIOR_FSM_HPP_
