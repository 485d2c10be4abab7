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

#include "jubileo/app/behavior_node.hpp"

#include "jubileo/bus/topic.hpp"
#include "jubileo/common/log.hpp"
#include "jubileo/grammar/command.hpp"

namespace jubileo::app {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

BehaviorNode::BehaviorNode(BehaviorNodeOptions options, BehaviorAssets assets)
    : options_(std::move(options)),
      assets_(std::move(assets)),
      machine_({&assets_.body, &assets_.expressions, &assets_.visemes, &assets_.gestures, &assets_.registry},
               options_.config) {
  measured_ = assets_.body.NeutralPose();
  client_ = std::make_unique<bus::BusClient>(options_.broker);
  const auto enqueue = [this](Inbound item) {
    {
      std::lock_guard lock(mu_);
      inbox_.push_back(std::move(item));
    }
    cv_.notify_one();
  };
  client_->Subscribe(bus::topics::kSpeechCommandText, [=](const bus::Envelope& env) {
    enqueue(CommandText{std::string(env.payload_view())});
  });
  client_->Subscribe(bus::topics::kFacePoseState, [=](const bus::Envelope& env) {
    try {
      enqueue(msg::DecodePoseState(env.payload_view()));
    } catch (const std::exception& e) {
      Log(LogLevel::kWarning, "behavior", std::string("bad pose state: ") + e.what());
    }
  });
  client_->Subscribe(bus::topics::kCameraDetections, [=](const bus::Envelope& env) {
    try {
      enqueue(msg::DecodeDetectionSet(env.payload_view()));
    } catch (const std::exception& e) {
      Log(LogLevel::kWarning, "behavior", std::string("bad detections: ") + e.what());
    }
  });
  client_->Sync();
}

BehaviorNode::~BehaviorNode() {
  Stop();
  if (client_) client_->Close();
}

void BehaviorNode::Stop() {
  {
    std::lock_guard lock(mu_);
    stop_ = true;
  }
  cv_.notify_all();
}

behavior::BehaviorState BehaviorNode::state() const {
  std::lock_guard lock(mu_);
  return state_;
}

void BehaviorNode::Run() {
  PublishStatus("transition");
  for (;;) {
    Inbound item;
    {
      std::unique_lock lock(mu_);
      cv_.wait(lock, [&] { return stop_ || !inbox_.empty(); });
      if (stop_) return;
      item = std::move(inbox_.front());
      inbox_.pop_front();
    }
    std::visit([this](const auto& x) { Handle(x); }, item);
  }
}

void BehaviorNode::Handle(const CommandText& in) {
  const auto result = grammar::ParseCommand(in.text);
  if (const auto* error = std::get_if<grammar::ParseError>(&result)) {
    PublishStatus("error", std::string(grammar::ErrcName(error->code)) + ": " + error->message);
    return;
  }
  const auto& ast = std::get<grammar::CommandAst>(result);
  Log(LogLevel::kInfo, "behavior", "command " + grammar::Describe(ast));
  Dispatch(behavior::CommandEvent{ast, now_});
}

void BehaviorNode::Handle(const msg::PoseState& in) {
  for (const auto& [joint, angle] : in.joints.angles) measured_.set(joint, angle);
  now_ = in.time;
  frame_seq_ = in.frame_seq;
}

void BehaviorNode::Handle(const sim::DetectionSet& in) {
  now_ = in.timestamp;
  frame_seq_ = in.frame_seq;
  const auto busy = state().busy_until;
  if (busy && now_ + 1e-9 >= *busy) Dispatch(behavior::TrajectoryFinishedEvent{now_});
  Dispatch(behavior::DetectionEvent{in});
  Dispatch(behavior::TickEvent{now_});
  PublishStatus("heartbeat");
}

void BehaviorNode::Dispatch(const behavior::Event& event) {
  behavior::Outcome outcome = machine_.Step(state(), event, measured_);
  {
    std::lock_guard lock(mu_);
    state_ = std::move(outcome.state);
  }
  for (const auto& action : outcome.actions) Execute(action);
}

void BehaviorNode::PublishFaceCommand(const motion::Trajectory& trajectory) {
  sim::JointCommand cmd{frame_seq_ + options_.command_lead, trajectory.keyframes(), {}};
  client_->Publish(bus::topics::kFacePoseCmd, msg::Encode(cmd));
}

void BehaviorNode::Execute(const behavior::Action& action) {
  std::visit(
      Overloaded{
          [&](const behavior::Announce&) {
            Log(LogLevel::kInfo, "behavior", "mode " + state().current.Describe());
            PublishStatus("transition");
          },
          [&](const behavior::PlanTransition& a) { PublishFaceCommand(a.trajectory); },
          [&](const behavior::GazeCommand& a) {
            model::FacePose pose;
            sim::WriteGaze(a.gaze, pose);
            sim::JointCommand cmd{frame_seq_ + options_.command_lead, {{0.0, pose}}, {}};
            client_->Publish(bus::topics::kFacePoseCmd, msg::Encode(cmd));
          },
          [&](const behavior::Speak& a) {
            client_->Publish(bus::topics::kSpeechSay, msg::Encode(msg::SayMessage{a.text, now_}));
            PublishFaceCommand(a.visemes);
          },
          [&](const behavior::Greet& a) {
            client_->Publish(bus::topics::kIdentityEvents,
                             msg::Encode(msg::IdentityEvent{a.match.name, a.match.score, now_}));
          },
          [&](const behavior::Reach& a) {
            sim::JointCommand cmd = a.arm;
            cmd.apply_seq = frame_seq_ + options_.command_lead;
            client_->Publish(bus::topics::kArmTrajectory, msg::Encode(cmd));
          },
          [&](const behavior::Neutral& a) {
            PublishFaceCommand(a.face);
            sim::JointCommand cmd = a.arm;
            cmd.apply_seq = frame_seq_ + options_.command_lead;
            client_->Publish(bus::topics::kArmTrajectory, msg::Encode(cmd));
          },
          [&](const behavior::Warn& a) {
            Log(LogLevel::kWarning, "behavior", a.message);
            PublishStatus("warning", a.message);
          },
      },
      action);
}

void BehaviorNode::PublishStatus(const std::string& event, std::optional<std::string> message) {
  const behavior::BehaviorState s = state();
  msg::BehaviorStatus status;
  status.event = event;
  status.mode = std::string(behavior::ModeName(s.current.mode));
  status.state = s.current.Describe();
  status.detail = s.current.Detail();
  if (s.return_to) status.return_to = s.return_to->Describe();
  status.entered_at = s.entered_at;
  status.time = now_;
  status.frame_seq = frame_seq_;
  status.target = s.target;
  status.error_px = s.error_px;
  status.message = std::move(message);
  client_->Publish(bus::topics::kBehaviorState, msg::Encode(status));
}

}  // namespace jubileo::app
