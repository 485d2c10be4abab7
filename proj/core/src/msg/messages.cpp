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

#include "jubileo/msg/messages.hpp"

#include <nlohmann/json.hpp>

namespace jubileo::msg {
namespace {

using nlohmann::json;

json Parse(std::string_view text, const char* what) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw MessageError(std::string(what) + ": expected a JSON object");
    return doc;
  } catch (const json::parse_error& e) {
    throw MessageError(std::string(what) + ": " + e.what());
  }
}

// Field access that reports the field name instead of a bare type error.
template <typename T>
T Get(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw MessageError(std::string("missing field '") + key + "'");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw MessageError(std::string("bad type for field '") + key + "'");
  }
}

template <typename T>
std::optional<T> GetOptional(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  return Get<T>(doc, key);
}

json PoseToJson(const model::FacePose& pose) {
  json out = json::object();
  for (const auto& [joint, angle] : pose.angles) out[joint] = angle;
  return out;
}

model::FacePose PoseFromJson(const json& value) {
  if (!value.is_object()) throw MessageError("pose must be an object of joint angles");
  model::FacePose pose;
  for (const auto& [joint, angle] : value.items()) {
    if (!angle.is_number()) throw MessageError("angle for '" + joint + "' must be a number");
    pose.set(joint, angle.get<double>());
  }
  return pose;
}

json Vec3ToJson(const sim::Vec3& v) { return json::array({v[0], v[1], v[2]}); }

sim::Vec3 Vec3FromJson(const json& value) {
  if (!value.is_array() || value.size() != 3) throw MessageError("expected [x, y, z]");
  sim::Vec3 v;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!value[i].is_number()) throw MessageError("expected [x, y, z]");
    v[i] = value[i].get<double>();
  }
  return v;
}

json EmbeddingToJson(const sim::Embedding& e) { return json(std::vector<double>(e.begin(), e.end())); }

sim::Embedding EmbeddingFromJson(const json& value) {
  if (!value.is_array() || value.size() != sim::kEmbeddingDim) {
    throw MessageError("embedding must hold 16 numbers");
  }
  sim::Embedding e;
  for (std::size_t i = 0; i < sim::kEmbeddingDim; ++i) {
    if (!value[i].is_number()) throw MessageError("embedding must hold numbers");
    e[i] = value[i].get<double>();
  }
  return e;
}

motion::ExpressionId ExpressionFromJson(const std::string& name) {
  auto id = motion::ParseExpressionId(name);
  if (!id) throw MessageError("unknown expression '" + name + "'");
  return *id;
}

template <typename T>
void PutOptional(json& doc, const char* key, const std::optional<T>& value) {
  if (value) doc[key] = *value;
}

}  // namespace

std::string Encode(const PoseState& m) {
  return json{{"frame_seq", m.frame_seq}, {"time", m.time}, {"joints", PoseToJson(m.joints)}}.dump();
}

PoseState DecodePoseState(std::string_view text) {
  const json doc = Parse(text, "pose state");
  if (!doc.contains("joints")) throw MessageError("missing field 'joints'");
  return {Get<std::uint64_t>(doc, "frame_seq"), Get<double>(doc, "time"), PoseFromJson(doc["joints"])};
}

std::string Encode(const WorldSnapshot& m) {
  json objects = json::array();
  for (const auto& o : m.objects) {
    objects.push_back({{"id", o.id},
                       {"color", ColorName(o.color)},
                       {"position", Vec3ToJson(o.position)},
                       {"radius", o.radius}});
  }
  json avatars = json::array();
  for (const auto& a : m.avatars) {
    avatars.push_back({{"id", a.id},
                       {"head_position", Vec3ToJson(a.head_position)},
                       {"expression", motion::ExpressionName(a.expression)},
                       {"embedding", EmbeddingToJson(a.embedding)}});
  }
  json doc{{"frame_seq", m.frame_seq},
           {"time", m.time},
           {"objects", objects},
           {"avatars", avatars},
           {"grabbed", m.grabbed ? json(*m.grabbed) : json(nullptr)},
           {"end_effector", Vec3ToJson(m.end_effector)}};
  return doc.dump();
}

WorldSnapshot DecodeWorldSnapshot(std::string_view text) {
  const json doc = Parse(text, "world snapshot");
  WorldSnapshot m;
  m.frame_seq = Get<std::uint64_t>(doc, "frame_seq");
  m.time = Get<double>(doc, "time");
  for (const json& o : Get<json>(doc, "objects")) {
    sim::SceneObject obj;
    obj.id = Get<std::string>(o, "id");
    const auto color = ParseColor(Get<std::string>(o, "color"));
    if (!color) throw MessageError("unknown color");
    obj.color = *color;
    obj.position = Vec3FromJson(Get<json>(o, "position"));
    obj.radius = Get<double>(o, "radius");
    m.objects.push_back(std::move(obj));
  }
  for (const json& a : Get<json>(doc, "avatars")) {
    sim::AvatarState avatar;
    avatar.id = Get<std::string>(a, "id");
    avatar.head_position = Vec3FromJson(Get<json>(a, "head_position"));
    avatar.expression = ExpressionFromJson(Get<std::string>(a, "expression"));
    avatar.embedding = EmbeddingFromJson(Get<json>(a, "embedding"));
    m.avatars.push_back(std::move(avatar));
  }
  m.grabbed = GetOptional<std::string>(doc, "grabbed");
  m.end_effector = Vec3FromJson(Get<json>(doc, "end_effector"));
  return m;
}

std::string Encode(const sim::DetectionSet& m) {
  json blobs = json::array();
  for (const auto& b : m.blobs) {
    json blob{{"kind", b.kind == sim::BlobKind::kFace ? "face" : "color"},
              {"label", b.label},
              {"center", json::array({b.u, b.v})},
              {"radius_px", b.radius_px},
              {"depth", b.depth}};
    if (b.embedding) blob["embedding"] = EmbeddingToJson(*b.embedding);
    if (b.expression) blob["expression"] = motion::ExpressionName(*b.expression);
    PutOptional(blob, "object_id", b.object_id);
    blobs.push_back(std::move(blob));
  }
  return json{{"frame_seq", m.frame_seq}, {"timestamp", m.timestamp}, {"blobs", blobs}}.dump();
}

sim::DetectionSet DecodeDetectionSet(std::string_view text) {
  const json doc = Parse(text, "detection set");
  sim::DetectionSet m;
  m.frame_seq = Get<std::uint64_t>(doc, "frame_seq");
  m.timestamp = Get<double>(doc, "timestamp");
  for (const json& b : Get<json>(doc, "blobs")) {
    sim::Blob blob;
    const auto kind = Get<std::string>(b, "kind");
    if (kind == "face") {
      blob.kind = sim::BlobKind::kFace;
    } else if (kind == "color") {
      blob.kind = sim::BlobKind::kColor;
    } else {
      throw MessageError("unknown blob kind '" + kind + "'");
    }
    blob.label = Get<std::string>(b, "label");
    const json center = Get<json>(b, "center");
    if (!center.is_array() || center.size() != 2 || !center[0].is_number() || !center[1].is_number()) {
      throw MessageError("center must be [u, v]");
    }
    blob.u = center[0].get<double>();
    blob.v = center[1].get<double>();
    blob.radius_px = Get<double>(b, "radius_px");
    blob.depth = Get<double>(b, "depth");
    if (b.contains("embedding")) blob.embedding = EmbeddingFromJson(b["embedding"]);
    if (auto e = GetOptional<std::string>(b, "expression")) blob.expression = ExpressionFromJson(*e);
    blob.object_id = GetOptional<std::string>(b, "object_id");
    if ((blob.kind == sim::BlobKind::kFace) != blob.embedding.has_value()) {
      throw MessageError("embedding is present exactly on face blobs");
    }
    m.blobs.push_back(std::move(blob));
  }
  return m;
}

std::string Encode(const sim::JointCommand& m) {
  json keyframes = json::array();
  for (const auto& k : m.keyframes) keyframes.push_back({{"t", k.time}, {"pose", PoseToJson(k.pose)}});
  json doc{{"keyframes", keyframes}};
  if (!m.grip.empty()) {
    json grip = json::array();
    for (const auto& g : m.grip) grip.push_back({{"t", g.time}, {"action", g.close ? "close" : "open"}});
    doc["grip"] = grip;
  }
  PutOptional(doc, "apply_seq", m.apply_seq);
  return doc.dump();
}

sim::JointCommand DecodeJointCommand(std::string_view text) {
  const json doc = Parse(text, "joint command");
  sim::JointCommand m;
  m.apply_seq = GetOptional<std::uint64_t>(doc, "apply_seq");
  for (const json& k : Get<json>(doc, "keyframes")) {
    if (!k.contains("pose")) throw MessageError("keyframe without 'pose'");
    m.keyframes.push_back({Get<double>(k, "t"), PoseFromJson(k["pose"])});
  }
  if (doc.contains("grip")) {
    for (const json& g : Get<json>(doc, "grip")) {
      const auto action = Get<std::string>(g, "action");
      if (action != "close" && action != "open") throw MessageError("grip action must be close or open");
      m.grip.push_back({Get<double>(g, "t"), action == "close"});
    }
  }
  return m;
}

std::string Encode(const sim::MoveRequest& m) {
  json doc{{"id", m.id}};
  if (m.position) doc["position"] = Vec3ToJson(*m.position);
  if (m.expression) doc["expression"] = motion::ExpressionName(*m.expression);
  PutOptional(doc, "apply_seq", m.apply_seq);
  return doc.dump();
}

sim::MoveRequest DecodeMoveRequest(std::string_view text) {
  const json doc = Parse(text, "move request");
  sim::MoveRequest m;
  m.id = Get<std::string>(doc, "id");
  m.apply_seq = GetOptional<std::uint64_t>(doc, "apply_seq");
  if (doc.contains("position")) m.position = Vec3FromJson(doc["position"]);
  if (auto e = GetOptional<std::string>(doc, "expression")) m.expression = ExpressionFromJson(*e);
  return m;
}

std::string Encode(const BehaviorStatus& m) {
  json doc{{"event", m.event},
           {"mode", m.mode},
           {"state", m.state},
           {"entered_at", m.entered_at},
           {"time", m.time},
           {"frame_seq", m.frame_seq}};
  PutOptional(doc, "detail", m.detail);
  PutOptional(doc, "return_to", m.return_to);
  PutOptional(doc, "target", m.target);
  PutOptional(doc, "error_px", m.error_px);
  PutOptional(doc, "message", m.message);
  return doc.dump();
}

BehaviorStatus DecodeBehaviorStatus(std::string_view text) {
  const json doc = Parse(text, "behavior status");
  BehaviorStatus m;
  m.event = Get<std::string>(doc, "event");
  m.mode = Get<std::string>(doc, "mode");
  m.state = doc.contains("state") ? Get<std::string>(doc, "state") : m.mode;
  m.entered_at = Get<double>(doc, "entered_at");
  m.time = Get<double>(doc, "time");
  m.frame_seq = Get<std::uint64_t>(doc, "frame_seq");
  m.detail = GetOptional<std::string>(doc, "detail");
  m.return_to = GetOptional<std::string>(doc, "return_to");
  m.target = GetOptional<std::string>(doc, "target");
  m.error_px = GetOptional<double>(doc, "error_px");
  m.message = GetOptional<std::string>(doc, "message");
  return m;
}

std::string Encode(const SayMessage& m) { return json{{"text", m.text}, {"time", m.time}}.dump(); }

SayMessage DecodeSayMessage(std::string_view text) {
  const json doc = Parse(text, "say message");
  return {Get<std::string>(doc, "text"), Get<double>(doc, "time")};
}

std::string Encode(const IdentityEvent& m) {
  return json{{"name", m.name}, {"score", m.score}, {"time", m.time}}.dump();
}

IdentityEvent DecodeIdentityEvent(std::string_view text) {
  const json doc = Parse(text, "identity event");
  return {Get<std::string>(doc, "name"), Get<double>(doc, "score"), Get<double>(doc, "time")};
}

}  // namespace jubileo::msg
