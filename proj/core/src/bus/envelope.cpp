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

#include "jubileo/bus/envelope.hpp"

#include <algorithm>
#include <array>

#include "jubileo/bus/crc32.hpp"

namespace jubileo::bus {
namespace {

void PutU16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void PutU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

std::uint16_t GetU16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>((p[0] << 8) | p[1]);
}

std::uint32_t GetU32(const std::uint8_t* p) {
  return (std::uint32_t{p[0]} << 24) | (std::uint32_t{p[1]} << 16) |
         (std::uint32_t{p[2]} << 8) | std::uint32_t{p[3]};
}

constexpr std::array<std::string_view, 7> kKindNames = {
    "", "publish", "subscribe", "unsubscribe", "ping", "pong", "error"};

}  // namespace

bool IsKnownKind(MessageKind kind) {
  const auto v = static_cast<std::uint8_t>(kind);
  return v >= 1 && v <= 6;
}

std::string_view KindName(MessageKind kind) {
  return IsKnownKind(kind) ? kKindNames[static_cast<std::uint8_t>(kind)] : "unknown";
}

std::optional<MessageKind> KindFromName(std::string_view name) {
  for (std::size_t i = 1; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<MessageKind>(i);
  }
  return std::nullopt;
}

std::string_view FrameErrcName(FrameErrc code) {
  switch (code) {
    case FrameErrc::kTopic: return "topic";
    case FrameErrc::kSize: return "size";
    case FrameErrc::kDesync: return "desync";
    case FrameErrc::kCorruption: return "corruption";
    case FrameErrc::kIncomplete: return "incomplete";
  }
  return "unknown";
}

Envelope MakeEnvelope(MessageKind kind, std::string_view topic, std::string_view payload) {
  return Envelope{kind, TopicName(std::string(topic)),
                  std::vector<std::uint8_t>(payload.begin(), payload.end())};
}

std::vector<std::uint8_t> EncodeEnvelope(MessageKind kind, const TopicName& topic,
                                         std::span<const std::uint8_t> payload) {
  if (payload.size() > kMaxPayloadSize) {
    throw FrameError(FrameErrc::kSize,
                     "payload of " + std::to_string(payload.size()) + " bytes exceeds cap");
  }
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + topic.size() + payload.size() + kCrcSize);
  out.push_back(kMagic0);
  out.push_back(kMagic1);
  out.push_back(kWireVersion);
  out.push_back(static_cast<std::uint8_t>(kind));
  PutU16(out, static_cast<std::uint16_t>(topic.size()));
  PutU32(out, static_cast<std::uint32_t>(payload.size()));
  out.insert(out.end(), topic.str().begin(), topic.str().end());
  out.insert(out.end(), payload.begin(), payload.end());
  PutU32(out, Crc32(out));
  return out;
}

std::vector<std::uint8_t> EncodeEnvelope(const Envelope& envelope) {
  return EncodeEnvelope(envelope.kind, envelope.topic, envelope.payload);
}

Decoded DecodeEnvelope(std::span<const std::uint8_t> bytes) {
  // Check the magic as soon as each byte is available so a desynced stream
  // is reported without waiting for a full header.
  if (!bytes.empty() && bytes[0] != kMagic0) {
    throw FrameError(FrameErrc::kDesync, "bad magic");
  }
  if (bytes.size() >= 2 && bytes[1] != kMagic1) {
    throw FrameError(FrameErrc::kDesync, "bad magic");
  }
  if (bytes.size() >= 3 && bytes[2] != kWireVersion) {
    throw FrameError(FrameErrc::kDesync, "unsupported version " + std::to_string(bytes[2]));
  }
  if (bytes.size() < kHeaderSize) {
    throw FrameError(FrameErrc::kIncomplete, "truncated header");
  }
  const std::size_t topic_len = GetU16(bytes.data() + 4);
  const std::size_t payload_len = GetU32(bytes.data() + 6);
  if (topic_len > kMaxTopicLength) {
    throw FrameError(FrameErrc::kCorruption, "topic length " + std::to_string(topic_len));
  }
  if (payload_len > kMaxPayloadSize) {
    throw FrameError(FrameErrc::kSize, "payload length " + std::to_string(payload_len));
  }
  const std::size_t total = kHeaderSize + topic_len + payload_len + kCrcSize;
  if (bytes.size() < total) {
    throw FrameError(FrameErrc::kIncomplete, "truncated frame");
  }
  const std::uint32_t expected = GetU32(bytes.data() + total - kCrcSize);
  if (Crc32(bytes.first(total - kCrcSize)) != expected) {
    throw FrameError(FrameErrc::kCorruption, "crc mismatch");
  }
  const auto* topic_begin = reinterpret_cast<const char*>(bytes.data() + kHeaderSize);
  std::string topic(topic_begin, topic_len);
  if (!TopicName::IsValid(topic)) {
    throw FrameError(FrameErrc::kTopic, "invalid topic in frame");
  }
  const auto payload_begin = bytes.begin() + static_cast<std::ptrdiff_t>(kHeaderSize + topic_len);
  Decoded decoded{
      Envelope{static_cast<MessageKind>(bytes[3]), TopicName(std::move(topic)),
               std::vector<std::uint8_t>(payload_begin,
                                         payload_begin + static_cast<std::ptrdiff_t>(payload_len))},
      total};
  return decoded;
}

void FrameReader::Feed(std::span<const std::uint8_t> bytes) {
  if (read_pos_ > 0 && read_pos_ >= buffer_.size() / 2) {
    buffer_.erase(buffer_.begin(), buffer_.begin() + static_cast<std::ptrdiff_t>(read_pos_));
    read_pos_ = 0;
  }
  buffer_.insert(buffer_.end(), bytes.begin(), bytes.end());
}

std::optional<Envelope> FrameReader::Next() {
  if (buffered() == 0) return std::nullopt;
  try {
    Decoded d = DecodeEnvelope(std::span(buffer_).subspan(read_pos_));
    read_pos_ += d.consumed;
    return std::move(d.envelope);
  } catch (const FrameError& e) {
    if (e.code() == FrameErrc::kIncomplete) return std::nullopt;
    throw;
  }
}

}  // namespace jubileo::bus
