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

#ifndef JUBILEO_APP_ASSETS_HPP_
#define JUBILEO_APP_ASSETS_HPP_

#include <filesystem>
#include <optional>

#include "jubileo/behavior/identity.hpp"
#include "jubileo/model/robot_model.hpp"
#include "jubileo/motion/expression.hpp"
#include "jubileo/motion/gesture_script.hpp"
#include "jubileo/motion/viseme.hpp"

namespace jubileo::app {

// Root of models/, config/, scenes/, scenarios/ and registries/. The
// JUBILEO_DATA_DIR environment variable wins over the build-time default.
std::filesystem::path DataDir();

// `path` unchanged if absolute or present relative to the working
// directory, otherwise resolved against DataDir().
std::filesystem::path ResolveDataPath(const std::filesystem::path& path);

inline constexpr const char* kDefaultBodyModel = "models/jubileo_body.urdf";
inline constexpr const char* kDefaultFaceModel = "models/jubileo_face.urdf";

// Everything the behavior node reads at startup.
struct BehaviorAssets {
  model::RobotModel body;
  motion::ExpressionLibrary expressions;
  motion::VisemeTable visemes;
  motion::GestureMap gestures;
  behavior::IdentityRegistry registry;
};

// Loads the body model, config/expressions.tbl, config/visemes.tbl and
// config/gestures.kfs; the registry only when a path is given. Propagates
// the loaders' exceptions.
BehaviorAssets LoadBehaviorAssets(const std::filesystem::path& body_model,
                                  const std::optional<std::filesystem::path>& registry);

}  // namespace jubileo::app

#endif  // JUBILEO_APP_ASSETS_HPP_
