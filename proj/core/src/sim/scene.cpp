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

#include <nlohmann/json.hpp>

#include "jubileo/common/text.hpp"
#include "jubileo/sim/world.hpp"

namespace jubileo::sim {
namespace {

using nlohmann::json;

Vec3 ReadVec3(const json& value, const std::string& what) {
  if (!value.is_array() || value.size() != 3) throw SceneError(what + " must be [x, y, z]");
  Vec3 v;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!value[i].is_number()) throw SceneError(what + " must hold numbers");
    v[i] = value[i].get<double>();
  }
  return v;
}

std::string ReadString(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_string()) throw SceneError(where + ": '" + key + "' must be a string");
  return it->get<std::string>();
}

}  // namespace

Scene Scene::Parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SceneError(std::string("scene is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SceneError("scene must be a JSON object");
  Scene scene;
  if (auto it = doc.find("objects"); it != doc.end()) {
    if (!it->is_array()) throw SceneError("'objects' must be an array");
    for (const json& o : *it) {
      if (!o.is_object()) throw SceneError("each object must be a JSON object");
      SceneObject obj;
      obj.id = ReadString(o, "id", "object");
      const std::string where = "object '" + obj.id + "'";
      const std::string color = ReadString(o, "color", where);
      const auto parsed = ParseColor(color);
      if (!parsed) throw SceneError(where + ": unknown color '" + color + "'");
      obj.color = *parsed;
      if (!o.contains("position")) throw SceneError(where + ": missing position");
      obj.position = ReadVec3(o["position"], where + " position");
      if (o.contains("radius")) {
        if (!o["radius"].is_number()) throw SceneError(where + ": radius must be a number");
        obj.radius = o["radius"].get<double>();
      }
      scene.objects.push_back(std::move(obj));
    }
  }
  if (auto it = doc.find("avatars"); it != doc.end()) {
    if (!it->is_array()) throw SceneError("'avatars' must be an array");
    for (const json& a : *it) {
      if (!a.is_object()) throw SceneError("each avatar must be a JSON object");
      AvatarState avatar;
      avatar.id = ReadString(a, "id", "avatar");
      const std::string where = "avatar '" + avatar.id + "'";
      if (!a.contains("head_position")) throw SceneError(where + ": missing head_position");
      avatar.head_position = ReadVec3(a["head_position"], where + " head_position");
      if (a.contains("expression")) {
        const std::string name = ReadString(a, "expression", where);
        const auto id = motion::ParseExpressionId(name);
        if (!id) throw SceneError(where + ": unknown expression '" + name + "'");
        avatar.expression = *id;
      }
      if (a.contains("embedding")) {
        const json& e = a["embedding"];
        if (!e.is_array() || e.size() != kEmbeddingDim) {
          throw SceneError(where + ": embedding must hold 16 numbers");
        }
        Embedding raw;
        for (std::size_t i = 0; i < kEmbeddingDim; ++i) {
          if (!e[i].is_number()) throw SceneError(where + ": embedding must hold numbers");
          raw[i] = e[i].get<double>();
        }
        try {
          avatar.embedding = Normalized(raw);
        } catch (const std::invalid_argument&) {
          throw SceneError(where + ": zero embedding");
        }
      } else {
        avatar.embedding = EmbeddingFromName(avatar.id);
      }
      scene.avatars.push_back(std::move(avatar));
    }
  }
  return scene;
}

Scene Scene::Load(const std::filesystem::path& path) { return Parse(ReadTextFile(path)); }

}  // namespace jubileo::sim
