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

#include "jubileo/app/assets.hpp"

#include <cstdlib>

#include "jubileo/model/urdf.hpp"

namespace jubileo::app {

std::filesystem::path DataDir() {
  if (const char* env = std::getenv("JUBILEO_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return JUBILEO_DEFAULT_DATA_DIR;
}

std::filesystem::path ResolveDataPath(const std::filesystem::path& path) {
  std::error_code ec;
  if (path.is_absolute() || std::filesystem::exists(path, ec)) return path;
  return DataDir() / path;
}

BehaviorAssets LoadBehaviorAssets(const std::filesystem::path& body_model,
                                  const std::optional<std::filesystem::path>& registry) {
  model::RobotModel body = model::LoadRobotDescription(ResolveDataPath(body_model));
  auto expressions = motion::ExpressionLibrary::Load(ResolveDataPath("config/expressions.tbl"), body);
  auto visemes = motion::VisemeTable::Load(ResolveDataPath("config/visemes.tbl"));
  auto gestures = motion::LoadGestureScriptFile(ResolveDataPath("config/gestures.kfs"), body);
  behavior::IdentityRegistry reg;
  if (registry) reg = behavior::IdentityRegistry::Load(ResolveDataPath(*registry));
  return {std::move(body), std::move(expressions), std::move(visemes), std::move(gestures), std::move(reg)};
}

}  // namespace jubileo::app
