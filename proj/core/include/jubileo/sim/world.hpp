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

#ifndef JUBILEO_SIM_WORLD_HPP_
#define JUBILEO_SIM_WORLD_HPP_

#include <array>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jubileo/common/color.hpp"
#include "jubileo/model/face_pose.hpp"
#include "jubileo/model/robot_model.hpp"
#include "jubileo/motion/expression.hpp"
#include "jubileo/motion/trajectory.hpp"
#include "jubileo/sim/camera.hpp"
#include "jubileo/sim/kinematics.hpp"

namespace jubileo::sim {

inline constexpr std::size_t kEmbeddingDim = 16;
using Embedding = std::array<double, kEmbeddingDim>;

// Reproducible unit vector derived from an identity name.
Embedding EmbeddingFromName(std::string_view name);
double Norm(const Embedding& e);
// Throws std::invalid_argument for a zero vector.
Embedding Normalized(const Embedding& e);

struct SceneObject {
  std::string id;
  Color color = Color::kRed;
  Vec3 position{0.0, 0.0, 1.0};
  double radius = 0.04;

  friend bool operator==(const SceneObject&, const SceneObject&) = default;
};

struct AvatarState {
  std::string id;
  Vec3 head_position{0.0, 0.0, 1.0};
  motion::ExpressionId expression = motion::ExpressionId::kNeutral;
  Embedding embedding{};

  friend bool operator==(const AvatarState&, const AvatarState&) = default;
};

inline constexpr double kFaceRadius = 0.09;
inline constexpr double kGrabRadius = 0.10;

class SceneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scene documents are JSON:
//
//   {"objects": [{"id": "red_ball", "color": "red", "position": [0.1, 0, 1.2],
//                 "radius": 0.04}],
//    "avatars": [{"id": "alice", "head_position": [0, -0.1, 1.5],
//                 "expression": "joy"}]}
//
// An avatar without "embedding" gets EmbeddingFromName(id).
struct Scene {
  std::vector<SceneObject> objects;
  std::vector<AvatarState> avatars;

  static Scene Parse(std::string_view json_text);
  static Scene Load(const std::filesystem::path& path);

  friend bool operator==(const Scene&, const Scene&) = default;
};

struct GripEvent {
  double time = 0.0;  // seconds from trajectory start
  bool close = true;

  friend bool operator==(const GripEvent&, const GripEvent&) = default;
};

// A joint trajectory for the world to follow. `apply_seq` names the frame
// whose step starts executing it; without it (or when that frame has
// already been produced) it starts on the next step.
struct JointCommand {
  std::optional<std::uint64_t> apply_seq;
  std::vector<motion::Keyframe> keyframes;
  std::vector<GripEvent> grip;

  friend bool operator==(const JointCommand&, const JointCommand&) = default;
};

struct MoveRequest {
  std::optional<std::uint64_t> apply_seq;
  std::string id;
  std::optional<Vec3> position;
  std::optional<motion::ExpressionId> expression;  // avatars only

  friend bool operator==(const MoveRequest&, const MoveRequest&) = default;
};

struct WorldStats {
  std::uint64_t late_commands = 0;
  std::uint64_t rejected_commands = 0;
};

// Kinematic world stepped by a single owner. Joints follow their commanded
// trajectories with first-order rate-clamped tracking.
class World {
 public:
  // `body` must contain the neck, eye and right arm joints. Throws
  // SceneError when the scene has duplicate ids or bad radii.
  World(model::RobotModel body, Scene scene);

  // Throws std::invalid_argument when the command names an unknown joint
  // or malformed keyframes.
  void Submit(JointCommand command);
  // Unknown ids are counted as rejected and ignored.
  void Submit(MoveRequest request);

  // Throws std::invalid_argument unless dt > 0.
  void Step(double dt);

  std::uint64_t frame_seq() const { return frame_seq_; }
  double time() const { return time_; }
  const model::FacePose& joints() const { return joints_; }
  GazeState gaze() const { return GazeFromPose(joints_); }
  const std::vector<SceneObject>& objects() const { return objects_; }
  const std::vector<AvatarState>& avatars() const { return avatars_; }
  const std::optional<std::string>& grabbed() const { return grabbed_; }
  const model::RobotModel& body() const { return body_; }
  const WorldStats& stats() const { return stats_; }

  Vec3 EndEffector() const;
  // Nearest object whose center is within kGrabRadius of the end effector.
  std::optional<std::string> GrabCheck() const;

 private:
  struct Active {
    motion::Trajectory trajectory;
    double start_time;
  };
  struct PendingGrip {
    double at;  // absolute world time
    bool close;
  };

  void Apply(const JointCommand& command);
  void Apply(const MoveRequest& request);

  model::RobotModel body_;
  KinematicChain arm_;
  model::FacePose joints_;
  std::vector<SceneObject> objects_;
  std::vector<AvatarState> avatars_;
  std::optional<std::string> grabbed_;
  std::uint64_t frame_seq_ = 0;
  double time_ = 0.0;

  std::deque<JointCommand> pending_commands_;
  std::deque<MoveRequest> pending_moves_;
  // Each joint follows the most recently started trajectory that names it.
  std::map<std::string, std::shared_ptr<const Active>, std::less<>> owner_;
  std::vector<PendingGrip> grips_;
  WorldStats stats_;
};

}  // namespace jubileo::sim

#endif  // JUBILEO_SIM_WORLD_HPP_
