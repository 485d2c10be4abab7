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

#include "jubileo/sim/world.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "jubileo/common/log.hpp"

namespace jubileo::sim {
namespace {

std::uint64_t Fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool IsArmJoint(const model::RobotModel& body, std::string_view joint) {
  const auto* d = body.Find(joint);
  return d != nullptr && d->group == model::JointGroup::kArm;
}

double Distance(const Vec3& a, const Vec3& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

}  // namespace

Embedding EmbeddingFromName(std::string_view name) {
  std::mt19937_64 rng(Fnv1a(name));
  Embedding e{};
  // Box-Muller by hand so the vector does not depend on the standard
  // library's distribution implementation.
  for (std::size_t i = 0; i < kEmbeddingDim; i += 2) {
    const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    e[i] = r * std::cos(2.0 * M_PI * u2);
    e[i + 1] = r * std::sin(2.0 * M_PI * u2);
  }
  return Normalized(e);
}

double Norm(const Embedding& e) {
  double sum = 0.0;
  for (double x : e) sum += x * x;
  return std::sqrt(sum);
}

Embedding Normalized(const Embedding& e) {
  const double n = Norm(e);
  if (!(n > 0.0)) throw std::invalid_argument("cannot normalize a zero embedding");
  Embedding out;
  for (std::size_t i = 0; i < kEmbeddingDim; ++i) out[i] = e[i] / n;
  return out;
}

World::World(model::RobotModel body, Scene scene)
    : body_(std::move(body)),
      arm_(body_, kRightHandLink),
      joints_(body_.NeutralPose()),
      objects_(std::move(scene.objects)),
      avatars_(std::move(scene.avatars)) {
  for (auto joint : {kNeckPan, kNeckTilt, kEyeYawLeft, kEyeYawRight, kEyePitchLeft, kEyePitchRight}) {
    if (body_.Find(joint) == nullptr) throw SceneError("robot model lacks joint '" + std::string(joint) + "'");
  }
  std::set<std::string, std::less<>> ids;
  for (const auto& o : objects_) {
    if (!(o.radius > 0.0)) throw SceneError("object '" + o.id + "' needs a positive radius");
    if (!ids.insert(o.id).second) throw SceneError("duplicate id '" + o.id + "'");
  }
  for (const auto& a : avatars_) {
    if (!ids.insert(a.id).second) throw SceneError("duplicate id '" + a.id + "'");
    if (std::abs(Norm(a.embedding) - 1.0) > 1e-6) {
      throw SceneError("avatar '" + a.id + "' embedding is not unit length");
    }
  }
}

void World::Submit(JointCommand command) {
  if (command.keyframes.empty()) throw std::invalid_argument("joint command has no keyframes");
  for (const auto& [joint, angle] : command.keyframes.front().pose.angles) {
    if (body_.Find(joint) == nullptr) throw std::invalid_argument("unknown joint '" + joint + "'");
  }
  for (const auto& g : command.grip) {
    if (!(g.time >= 0.0) || !std::isfinite(g.time)) throw std::invalid_argument("bad grip time");
  }
  // Validates ordering and joint sets up front so Step never throws.
  motion::Trajectory check(command.keyframes, {});
  for (const auto& k : check.keyframes()) {
    for (const auto& [joint, angle] : k.pose.angles) {
      if (!std::isfinite(angle)) throw std::invalid_argument("non-finite angle for '" + joint + "'");
    }
  }
  pending_commands_.push_back(std::move(command));
}

void World::Submit(MoveRequest request) { pending_moves_.push_back(std::move(request)); }

void World::Apply(const JointCommand& command) {
  auto active = std::make_shared<const Active>(
      Active{motion::Trajectory(command.keyframes, motion::RateLimitsFromModel(body_)), time_});
  bool touches_arm = !command.grip.empty();
  for (const auto& [joint, angle] : command.keyframes.front().pose.angles) {
    owner_[joint] = active;
    touches_arm = touches_arm || IsArmJoint(body_, joint);
  }
  if (touches_arm) grips_.clear();
  for (const auto& g : command.grip) grips_.push_back({time_ + g.time, g.close});
  std::stable_sort(grips_.begin(), grips_.end(),
                   [](const PendingGrip& a, const PendingGrip& b) { return a.at < b.at; });
}

void World::Apply(const MoveRequest& request) {
  for (auto& o : objects_) {
    if (o.id != request.id) continue;
    if (grabbed_ == o.id || !request.position || request.expression) {
      ++stats_.rejected_commands;
      return;
    }
    o.position = *request.position;
    return;
  }
  for (auto& a : avatars_) {
    if (a.id != request.id) continue;
    if (request.position) a.head_position = *request.position;
    if (request.expression) a.expression = *request.expression;
    return;
  }
  ++stats_.rejected_commands;
  Log(LogLevel::kWarning, "sim", "move request for unknown id '" + request.id + "'");
}

void World::Step(double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("step needs dt > 0");
  const std::uint64_t next = frame_seq_ + 1;

  const auto is_due = [&](const std::optional<std::uint64_t>& seq) {
    if (seq && *seq > next) return false;
    if (seq && *seq < next) ++stats_.late_commands;
    return true;
  };
  for (auto it = pending_commands_.begin(); it != pending_commands_.end();) {
    if (!is_due(it->apply_seq)) {
      ++it;
      continue;
    }
    Apply(*it);
    it = pending_commands_.erase(it);
  }
  for (auto it = pending_moves_.begin(); it != pending_moves_.end();) {
    if (!is_due(it->apply_seq)) {
      ++it;
      continue;
    }
    Apply(*it);
    it = pending_moves_.erase(it);
  }

  const double t_end = time_ + dt;
  for (auto& [joint, active] : owner_) {
    const auto* d = body_.Find(joint);
    const double goal = d->Clamp(*active->trajectory.Sample(t_end - active->start_time).get(joint));
    double& angle = joints_.angles.at(joint);
    const double step = d->velocity_limit * dt;
    angle += std::clamp(goal - angle, -step, step);
  }

  std::size_t fired = 0;
  while (fired < grips_.size() && grips_[fired].at <= t_end + 1e-12) {
    if (grips_[fired].close) {
      if (!grabbed_) grabbed_ = GrabCheck();
    } else {
      grabbed_.reset();
    }
    ++fired;
  }
  grips_.erase(grips_.begin(), grips_.begin() + static_cast<std::ptrdiff_t>(fired));

  if (grabbed_) {
    const Vec3 ee = EndEffector();
    for (auto& o : objects_) {
      if (o.id == *grabbed_) o.position = ee;
    }
  }
  frame_seq_ = next;
  time_ = t_end;
}

Vec3 World::EndEffector() const { return arm_.EndPoint(joints_); }

std::optional<std::string> World::GrabCheck() const {
  const Vec3 ee = EndEffector();
  std::optional<std::string> best;
  double best_distance = kGrabRadius;
  for (const auto& o : objects_) {
    const double d = Distance(o.position, ee);
    if (d <= best_distance) {
      best_distance = d;
      best = o.id;
    }
  }
  return best;
}

}  // namespace jubileo::sim
