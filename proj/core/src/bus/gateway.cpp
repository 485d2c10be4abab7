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

#include "jubileo/bus/gateway.hpp"

#include <nlohmann/json.hpp>

namespace jubileo::bus {

bool IsValidUtf8(std::string_view text) {
  std::size_t i = 0;
  const auto at = [&](std::size_t k) { return static_cast<unsigned char>(text[k]); };
  while (i < text.size()) {
    const unsigned char c = at(i);
    std::size_t extra;
    std::uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + extra >= text.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      if ((at(i + k) & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (at(i + k) & 0x3F);
    }
    // Reject overlong forms, surrogates and out-of-range code points.
    if ((extra == 1 && cp < 0x80) || (extra == 2 && cp < 0x800) || (extra == 3 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
      return false;
    }
    i += extra + 1;
  }
  return true;
}

std::string GatewayTranslate(const Envelope& envelope) {
  const std::string_view payload = envelope.payload_view();
  if (!IsValidUtf8(payload)) {
    throw TranslationError("payload on " + envelope.topic.str() + " is not UTF-8");
  }
  nlohmann::json j;
  j["topic"] = envelope.topic.str();
  j["kind"] = std::string(KindName(envelope.kind));
  j["payload"] = std::string(payload);
  return j.dump();
}

Envelope GatewayUntranslate(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw TranslationError(std::string("malformed gateway message: ") + e.what());
  }
  if (!j.is_object() || !j.contains("topic") || !j["topic"].is_string() || !j.contains("kind") ||
      !j["kind"].is_string() || !j.contains("payload") || !j["payload"].is_string()) {
    throw TranslationError("gateway message needs string fields topic, kind, payload");
  }
  const auto kind = KindFromName(j["kind"].get<std::string>());
  if (!kind) throw TranslationError("unknown kind '" + j["kind"].get<std::string>() + "'");
  const auto topic = j["topic"].get<std::string>();
  if (!TopicName::IsValid(topic)) throw TranslationError("invalid topic '" + topic + "'");
  const auto payload = j["payload"].get<std::string>();
  if (payload.size() > kMaxPayloadSize) throw TranslationError("payload exceeds cap");
  return Envelope{*kind, TopicName(topic), std::vector<std::uint8_t>(payload.begin(), payload.end())};
}

}  // namespace jubileo::bus
