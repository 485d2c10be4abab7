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

#include "jubileo/app/sim_node.hpp"

#include <thread>

#include "jubileo/bus/topic.hpp"
#include "jubileo/common/log.hpp"
#include "jubileo/msg/messages.hpp"

namespace jubileo::app {

SimNode::SimNode(SimNodeOptions options)
    : options_(std::move(options)), world_(options_.body, options_.scene) {
  if (!(options_.rate_hz > 0.0)) throw std::invalid_argument("sim rate must be positive");
  client_ = std::make_unique<bus::BusClient>(options_.broker);
  const auto enqueue = [this](Inbound item) {
    std::lock_guard lock(mu_);
    inbox_.push_back(std::move(item));
  };
  const auto malformed = [this](std::string_view topic, const std::exception& e) {
    ++malformed_;
    Log(LogLevel::kWarning, "sim", "dropping " + std::string(topic) + ": " + e.what());
  };
  for (auto topic : {bus::topics::kFacePoseCmd, bus::topics::kArmTrajectory}) {
    client_->Subscribe(topic, [=](const bus::Envelope& env) {
      try {
        enqueue(msg::DecodeJointCommand(env.payload_view()));
      } catch (const std::exception& e) {
        malformed(topic, e);
      }
    });
  }
  client_->Subscribe(bus::topics::kWorldMoveObject, [=](const bus::Envelope& env) {
    try {
      enqueue(msg::DecodeMoveRequest(env.payload_view()));
    } catch (const std::exception& e) {
      malformed(bus::topics::kWorldMoveObject, e);
    }
  });
  if (options_.sync_behavior) {
    client_->Subscribe(bus::topics::kBehaviorState, [this](const bus::Envelope& env) {
      try {
        const auto status = msg::DecodeBehaviorStatus(env.payload_view());
        if (status.event != "heartbeat") return;
        {
          std::lock_guard lock(mu_);
          if (!acknowledged_ || status.frame_seq > *acknowledged_) acknowledged_ = status.frame_seq;
        }
        cv_.notify_all();
      } catch (const std::exception&) {
        // Not ours to validate.
      }
    });
  }
  client_->Sync();
}

SimNode::~SimNode() {
  Stop();
  if (client_) client_->Close();
}

void SimNode::Stop() {
  {
    std::lock_guard lock(mu_);
    stop_ = true;
  }
  cv_.notify_all();
}

void SimNode::DrainInbox() {
  std::deque<Inbound> items;
  {
    std::lock_guard lock(mu_);
    items.swap(inbox_);
  }
  for (auto& item : items) {
    try {
      std::visit([this](auto& x) { world_.Submit(std::move(x)); }, item);
    } catch (const std::exception& e) {
      ++malformed_;
      Log(LogLevel::kWarning, "sim", std::string("rejected command: ") + e.what());
    }
  }
}

void SimNode::PublishFrame() {
  msg::PoseState pose{world_.frame_seq(), world_.time(), world_.joints()};
  client_->Publish(bus::topics::kFacePoseState, msg::Encode(pose));
  msg::WorldSnapshot snapshot{world_.frame_seq(), world_.time(), world_.objects(), world_.avatars(),
                              world_.grabbed(),   world_.EndEffector()};
  client_->Publish(bus::topics::kWorldObjects, msg::Encode(snapshot));
  client_->Publish(bus::topics::kCameraDetections,
                   msg::Encode(sim::Detect(world_, options_.camera, options_.noise, options_.seed)));
}

void SimNode::WaitForBehavior(std::uint64_t frame) {
  if (!options_.sync_behavior) return;
  std::unique_lock lock(mu_);
  const bool ok = cv_.wait_for(lock, options_.sync_timeout,
                               [&] { return stop_ || (acknowledged_ && *acknowledged_ >= frame); });
  if (!ok) {
    ++sync_timeouts_;
    Log(LogLevel::kWarning, "sim", "no behavior heartbeat for frame " + std::to_string(frame));
  }
}

void SimNode::Run() {
  const double dt = 1.0 / options_.rate_hz;
  const auto start = std::chrono::steady_clock::now();
  PublishFrame();
  WaitForBehavior(world_.frame_seq());
  if (after_frame_) after_frame_(world_);
  for (;;) {
    {
      std::lock_guard lock(mu_);
      if (stop_) break;
    }
    if (options_.max_frames && world_.frame_seq() >= *options_.max_frames) break;
    if (options_.time_scale > 0.0) {
      const auto due = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                   std::chrono::duration<double>((world_.frame_seq() + 1) * dt / options_.time_scale));
      std::unique_lock lock(mu_);
      cv_.wait_until(lock, due, [&] { return stop_; });
      if (stop_) break;
    }
    if (before_step_) before_step_(world_);
    DrainInbox();
    world_.Step(dt);
    PublishFrame();
    WaitForBehavior(world_.frame_seq());
    if (after_frame_) after_frame_(world_);
  }
}

}  // namespace jubileo::app
