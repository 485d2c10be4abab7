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

#include "jubileo/behavior/fsm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jubileo/motion/planner.hpp"

namespace jubileo::behavior {
namespace {

constexpr double kTickDt = 1.0 / motion::kControlRateHz;
constexpr double kTimeEpsilon = 1e-9;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

ModeState MakeMode(Mode mode, std::optional<Color> color = std::nullopt) {
  ModeState m;
  m.mode = mode;
  m.color = color;
  return m;
}

bool IsStacked(Mode mode) { return mode == Mode::kPlayingExpression || mode == Mode::kSpeaking; }

bool IsEyeJoint(const model::RobotModel& body, std::string_view joint) {
  const auto* d = body.Find(joint);
  return d != nullptr && d->group == model::JointGroup::kEye;
}

// Measured angles for `joints`, neutral where nothing was measured yet.
model::FacePose Measured(const model::FacePose& measured, const model::FacePose& neutral) {
  model::FacePose out;
  for (const auto& [joint, angle] : neutral.angles) out.set(joint, measured.get(joint).value_or(angle));
  return out;
}

sim::JointCommand Concatenate(const motion::GestureMap& gestures, double* close_at, double* duration) {
  sim::JointCommand out;
  double offset = 0.0;
  for (std::string_view name : {"reach_forward", "grab_close", "retract"}) {
    auto it = gestures.find(name);
    if (it == gestures.end()) throw std::invalid_argument("gesture map lacks '" + std::string(name) + "'");
    const auto& frames = it->second.keyframes();
    for (std::size_t i = 0; i < frames.size(); ++i) {
      if (i == 0 && !out.keyframes.empty()) {
        if (!(frames[0].pose == out.keyframes.back().pose) || frames[0].time != 0.0) {
          throw std::invalid_argument("gesture '" + std::string(name) + "' does not start where the previous one ends");
        }
        continue;
      }
      out.keyframes.push_back({offset + frames[i].time, frames[i].pose});
    }
    offset = out.keyframes.back().time;
    if (name == "grab_close") *close_at = offset;
  }
  *duration = offset;
  out.grip.push_back({*close_at, true});
  return out;
}

}  // namespace

std::string_view ModeName(Mode mode) {
  switch (mode) {
    case Mode::kIdle: return "Idle";
    case Mode::kTrackingColor: return "TrackingColor";
    case Mode::kTrackingFace: return "TrackingFace";
    case Mode::kPlayingExpression: return "PlayingExpression";
    case Mode::kSpeaking: return "Speaking";
    case Mode::kGrabbing: return "Grabbing";
  }
  return "Idle";
}

bool ModeState::tracking() const {
  return mode == Mode::kTrackingColor || mode == Mode::kTrackingFace || mode == Mode::kGrabbing;
}

std::optional<std::string> ModeState::Detail() const {
  switch (mode) {
    case Mode::kTrackingColor: return std::string(ColorName(*color));
    case Mode::kGrabbing: return std::string(ColorName(*color));
    case Mode::kPlayingExpression: return std::string(motion::ExpressionName(*expression));
    case Mode::kSpeaking: return text;
    default: return std::nullopt;
  }
}

std::string ModeState::Describe() const {
  std::string out(ModeName(mode));
  switch (mode) {
    case Mode::kTrackingColor: return out + "(" + std::string(ColorName(*color)) + ")";
    case Mode::kGrabbing:
      return out + "(" + std::string(ColorName(*color)) + (phase == GrabPhase::kReaching ? ", reaching)" : ")");
    case Mode::kPlayingExpression: return out + "(" + std::string(motion::ExpressionTitle(*expression)) + ")";
    case Mode::kSpeaking: return out + "(\"" + text + "\")";
    default: return out;
  }
}

std::string_view ActionName(const Action& action) {
  return std::visit(Overloaded{
                        [](const Announce&) { return std::string_view("announce"); },
                        [](const PlanTransition&) { return std::string_view("plan_transition"); },
                        [](const GazeCommand& g) { return std::string_view(g.scan ? "scan" : "gaze_update"); },
                        [](const Speak&) { return std::string_view("speak"); },
                        [](const Greet&) { return std::string_view("greet"); },
                        [](const Reach&) { return std::string_view("reach"); },
                        [](const Neutral&) { return std::string_view("neutral"); },
                        [](const Warn&) { return std::string_view("warn"); },
                    },
                    action);
}

struct BehaviorMachine::Context {
  BehaviorState s;
  std::vector<Action> actions;
  const model::FacePose& measured;
};

BehaviorMachine::BehaviorMachine(BehaviorResources resources, BehaviorConfig config)
    : res_(resources), config_(config) {
  if (res_.body == nullptr || res_.expressions == nullptr || res_.visemes == nullptr ||
      res_.gestures == nullptr || res_.registry == nullptr) {
    throw std::invalid_argument("behavior machine needs every resource");
  }
  limits_ = GazeLimitsFromModel(*res_.body);
  rates_ = motion::RateLimitsFromModel(*res_.body);
  double close_at = 0.0;
  reach_ = Concatenate(*res_.gestures, &close_at, &reach_duration_);
}

Outcome BehaviorMachine::Step(const BehaviorState& state, const Event& event,
                              const model::FacePose& measured) const {
  Context c{state, {}, measured};
  std::visit(Overloaded{
                 [&](const CommandEvent& e) { OnCommand(c, e.command, e.time); },
                 [&](const DetectionEvent& e) { OnDetections(c, e.detections); },
                 [&](const TrajectoryFinishedEvent& e) { OnFinished(c, e.time); },
                 [&](const TickEvent& e) { OnTick(c, e.time); },
             },
             event);
  return {std::move(c.s), std::move(c.actions)};
}

void BehaviorMachine::Enter(Context& c, ModeState next, double time) const {
  if (next == c.s.current) return;
  const bool new_episode = !(c.s.return_to && *c.s.return_to == next && IsStacked(c.s.current.mode));
  c.s.current = std::move(next);
  c.s.entered_at = time;
  if (c.s.current.tracking() && new_episode) {
    c.s.last_seen = time;
    c.s.scanning = false;
    c.s.greeted = false;
    c.s.target.reset();
    c.s.error_px.reset();
  }
  if (!c.s.current.tracking() && !IsStacked(c.s.current.mode)) {
    c.s.target.reset();
    c.s.error_px.reset();
    c.s.scanning = false;
  }
  c.actions.emplace_back(Announce{});
}

std::optional<TargetSpec> BehaviorMachine::CurrentTarget(const BehaviorState& s) const {
  const ModeState* m = &s.current;
  if (IsStacked(m->mode)) {
    if (!s.return_to) return std::nullopt;
    m = &*s.return_to;
  }
  switch (m->mode) {
    case Mode::kTrackingFace: return TargetSpec{AnyFace{}};
    case Mode::kTrackingColor:
    case Mode::kGrabbing: return TargetSpec{*m->color};
    default: return std::nullopt;
  }
}

void BehaviorMachine::StartExpression(Context& c, motion::ExpressionId id, double time) const {
  if (!IsStacked(c.s.current.mode)) c.s.return_to = c.s.current;
  const model::FacePose& target = res_.expressions->Pose(id);
  model::FacePose from = Measured(c.measured, target);
  model::FacePose to = target;
  if (CurrentTarget(c.s)) {
    // Gaze keeps following the target; the expression leaves the eyes alone.
    std::erase_if(from.angles, [&](const auto& kv) { return IsEyeJoint(*res_.body, kv.first); });
    std::erase_if(to.angles, [&](const auto& kv) { return IsEyeJoint(*res_.body, kv.first); });
  }
  auto plan = motion::PlanTransition(from, to, config_.expression_duration, rates_);
  c.s.busy_until = time + plan.trajectory.duration();
  ModeState next;
  next.mode = Mode::kPlayingExpression;
  next.expression = id;
  Enter(c, next, time);
  c.actions.emplace_back(PlanTransition{id, std::move(plan.trajectory)});
}

void BehaviorMachine::StartSpeech(Context& c, const std::string& text, double time) const {
  if (!IsStacked(c.s.current.mode)) c.s.return_to = c.s.current;
  auto visemes = motion::VisemeSchedule(text, config_.speech_rate, *res_.visemes, rates_);
  c.s.busy_until = time + visemes.duration();
  ModeState next;
  next.mode = Mode::kSpeaking;
  next.text = text;
  Enter(c, next, time);
  c.actions.emplace_back(Speak{text, std::move(visemes)});
}

void BehaviorMachine::OnCommand(Context& c, const grammar::CommandAst& command, double time) const {
  auto& s = c.s;
  if (s.current.mode == Mode::kGrabbing && s.current.phase == GrabPhase::kReaching &&
      !std::holds_alternative<grammar::Stop>(command)) {
    c.actions.emplace_back(Warn{"arm is reaching; only stop is accepted"});
    return;
  }
  const auto look = [&](ModeState wanted) {
    const bool grabbing = s.current.mode == Mode::kGrabbing ||
                          (IsStacked(s.current.mode) && s.return_to && s.return_to->mode == Mode::kGrabbing);
    if (grabbing) {
      c.actions.emplace_back(Warn{"grabbing; look command ignored"});
      return;
    }
    if (IsStacked(s.current.mode)) {
      if (!s.return_to || !(*s.return_to == wanted)) {
        s.return_to = wanted;
        s.last_seen = time;
        s.greeted = false;
        s.scanning = false;
      }
      return;
    }
    Enter(c, wanted, time);
  };
  std::visit(
      Overloaded{
          [&](const grammar::Stop&) {
            Enter(c, ModeState{}, time);
            s.return_to.reset();
            s.pending_say.reset();
            s.busy_until.reset();
            model::FacePose neutral = res_.body->NeutralFacePose();
            neutral.set(sim::kNeckPan, res_.body->At(sim::kNeckPan).neutral_angle);
            neutral.set(sim::kNeckTilt, res_.body->At(sim::kNeckTilt).neutral_angle);
            auto face = motion::PlanTransition(Measured(c.measured, neutral), neutral, config_.neutral_duration, rates_);
            model::FacePose arm_rest;
            for (const auto* d : res_.body->JointsInGroup(model::JointGroup::kArm)) arm_rest.set(d->name, d->neutral_angle);
            sim::JointCommand arm;
            if (!arm_rest.empty()) {
              arm.keyframes = motion::PlanTransition(Measured(c.measured, arm_rest), arm_rest,
                                                     config_.neutral_duration, rates_)
                                  .trajectory.keyframes();
            } else {
              arm.keyframes.push_back({0.0, {}});
            }
            arm.grip.push_back({0.0, false});
            c.actions.emplace_back(Neutral{std::move(face.trajectory), std::move(arm)});
          },
          [&](const grammar::LookAtMe&) { look(MakeMode(Mode::kTrackingFace)); },
          [&](const grammar::LookAtColor& l) { look(MakeMode(Mode::kTrackingColor, l.color)); },
          [&](const grammar::ShowExpression& e) { StartExpression(c, e.expression, time); },
          [&](const grammar::Say& say) {
            if (s.current.mode == Mode::kPlayingExpression) {
              s.pending_say = say.text;
              return;
            }
            StartSpeech(c, say.text, time);
          },
          [&](const grammar::Mimic&) {
            std::optional<sim::Blob> face;
            if (s.last_detections) face = SelectTarget(*s.last_detections, AnyFace{});
            if (!face || !face->expression) {
              c.actions.emplace_back(Warn{"no face in view to mimic"});
              return;
            }
            StartExpression(c, *face->expression, time);
          },
          [&](const grammar::Grab& g) {
            const ModeState m = MakeMode(Mode::kGrabbing, g.color);
            if (IsStacked(s.current.mode)) {
              s.return_to = m;
              s.last_seen = time;
              return;
            }
            if (s.current.mode == Mode::kGrabbing && s.current.color == g.color) return;
            Enter(c, m, time);
          },
      },
      command);
}

void BehaviorMachine::Track(Context& c, const sim::DetectionSet& dets, const TargetSpec& want) const {
  auto& s = c.s;
  const auto blob = SelectTarget(dets, want);
  if (!blob) {
    s.target.reset();
    s.error_px.reset();
    return;
  }
  s.last_seen = dets.timestamp;
  s.scanning = false;
  s.target = blob->kind == sim::BlobKind::kColor && blob->object_id ? *blob->object_id : blob->label;
  s.error_px = PixelError(config_.camera, blob->u, blob->v);
  const auto gaze = GazeUpdate(blob->u, blob->v, sim::GazeFromPose(c.measured), config_.gains, config_.camera,
                               kTickDt, limits_);
  c.actions.emplace_back(GazeCommand{gaze, false});

  if (s.current.mode == Mode::kTrackingFace && !s.greeted && blob->embedding) {
    if (auto match = res_.registry->Identify(*blob->embedding)) {
      s.greeted = true;
      c.actions.emplace_back(Greet{*match});
      const std::string text = "Hello, " + match->name;
      c.actions.emplace_back(
          Speak{text, motion::VisemeSchedule(text, config_.speech_rate, *res_.visemes, rates_)});
    }
  }
  if (s.current.mode == Mode::kGrabbing && s.current.phase == GrabPhase::kApproach &&
      *s.error_px <= config_.gains.deadband_px && blob->depth <= config_.reach_depth) {
    ModeState next = s.current;
    next.phase = GrabPhase::kReaching;
    Enter(c, next, dets.timestamp);
    s.busy_until = dets.timestamp + reach_duration_;
    sim::JointCommand arm = reach_;
    c.actions.emplace_back(Reach{std::move(arm)});
  }
}

void BehaviorMachine::OnDetections(Context& c, const sim::DetectionSet& dets) const {
  c.s.last_detections = dets;
  if (auto want = CurrentTarget(c.s)) Track(c, dets, *want);
}

void BehaviorMachine::OnFinished(Context& c, double time) const {
  auto& s = c.s;
  if (!s.busy_until || time + kTimeEpsilon < *s.busy_until) return;
  switch (s.current.mode) {
    case Mode::kPlayingExpression:
      s.busy_until.reset();
      if (s.pending_say) {
        const std::string text = *s.pending_say;
        s.pending_say.reset();
        StartSpeech(c, text, time);
        return;
      }
      [[fallthrough]];
    case Mode::kSpeaking: {
      s.busy_until.reset();
      ModeState back = s.return_to.value_or(ModeState{});
      Enter(c, back, time);
      s.return_to.reset();
      return;
    }
    case Mode::kGrabbing:
      if (s.current.phase == GrabPhase::kReaching) {
        s.busy_until.reset();
        Enter(c, ModeState{}, time);
      }
      return;
    default:
      return;
  }
}

void BehaviorMachine::OnTick(Context& c, double time) const {
  auto& s = c.s;
  const double dt = s.last_tick ? std::max(0.0, time - *s.last_tick) : kTickDt;
  s.last_tick = time;
  if (!CurrentTarget(s)) return;
  if (s.current.mode == Mode::kGrabbing && s.current.phase == GrabPhase::kReaching) return;
  if (time - s.last_seen <= config_.lost_timeout) return;
  const sim::GazeState measured = sim::GazeFromPose(c.measured);
  if (!s.scanning) {
    s.scanning = true;
    s.greeted = false;
    s.scan_pan = measured.neck_pan;
  }
  double pan = s.scan_pan + s.scan_direction * config_.scan_speed * dt;
  if (pan >= config_.scan_amplitude) {
    pan = config_.scan_amplitude;
    s.scan_direction = -1;
  } else if (pan <= -config_.scan_amplitude) {
    pan = -config_.scan_amplitude;
    s.scan_direction = 1;
  }
  s.scan_pan = pan;
  sim::GazeState gaze{pan, measured.neck_tilt, 0.0, 0.0};
  c.actions.emplace_back(GazeCommand{gaze, true});
}

}  // namespace jubileo::behavior
