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

#ifndef JUBILEO_BUS_ENVELOPE_HPP_
#define JUBILEO_BUS_ENVELOPE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jubileo/bus/topic.hpp"

namespace jubileo::bus {

/**
 * Wire layout of one frame (all integers big-endian):
 *
 *   +-------+---------+------+-----------+-------------+-------+---------+-------+
 *   | magic | version | kind | topic_len | payload_len | topic | payload | crc32 |
 *   | 2     | 1       | 1    | 2         | 4           | var   | var     | 4     |
 *   +-------+---------+------+-----------+-------------+-------+---------+-------+
 *
 * magic is "JB" (0x4A 0x42), version is 1, and the CRC covers every byte
 * that precedes it.
 */
inline constexpr std::uint8_t kMagic0 = 0x4A;
inline constexpr std::uint8_t kMagic1 = 0x42;
inline constexpr std::uint8_t kWireVersion = 1;
inline constexpr std::size_t kHeaderSize = 10;
inline constexpr std::size_t kCrcSize = 4;
inline constexpr std::size_t kMaxPayloadSize = 1u << 20;

// The kind byte is kept as a raw value so that frames carrying a kind this
// build does not know can still be decoded and answered with kError.
enum class MessageKind : std::uint8_t {
  kPublish = 1,
  kSubscribe = 2,
  kUnsubscribe = 3,
  kPing = 4,
  kPong = 5,
  kError = 6,
};

bool IsKnownKind(MessageKind kind);
std::string_view KindName(MessageKind kind);
std::optional<MessageKind> KindFromName(std::string_view name);

struct Envelope {
  MessageKind kind = MessageKind::kPublish;
  TopicName topic{std::string(topics::kBusControl)};
  std::vector<std::uint8_t> payload;

  std::string_view payload_view() const {
    return {reinterpret_cast<const char*>(payload.data()), payload.size()};
  }

  friend bool operator==(const Envelope&, const Envelope&) = default;
};

Envelope MakeEnvelope(MessageKind kind, std::string_view topic, std::string_view payload);

enum class FrameErrc {
  kTopic,       // topic path invalid
  kSize,        // payload above kMaxPayloadSize
  kDesync,      // magic/version mismatch; the connection must be dropped
  kCorruption,  // CRC mismatch; the frame is discarded and the connection dropped
  kIncomplete,  // stream ended inside a frame
};

std::string_view FrameErrcName(FrameErrc code);

class FrameError : public std::runtime_error {
 public:
  FrameError(FrameErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  FrameErrc code() const { return code_; }

 private:
  FrameErrc code_;
};

// Throws FrameError(kSize) if the payload is over the cap.
std::vector<std::uint8_t> EncodeEnvelope(MessageKind kind, const TopicName& topic,
                                         std::span<const std::uint8_t> payload);
std::vector<std::uint8_t> EncodeEnvelope(const Envelope& envelope);

struct Decoded {
  Envelope envelope;
  std::size_t consumed = 0;
};

// Decodes exactly one frame from the front of `bytes`. Throws FrameError;
// kIncomplete means `bytes` ends before the frame does.
Decoded DecodeEnvelope(std::span<const std::uint8_t> bytes);

// Accumulates stream bytes and yields whole frames. After any error other
// than "need more bytes" the reader is poisoned and the stream must be closed.
class FrameReader {
 public:
  void Feed(std::span<const std::uint8_t> bytes);
  // Returns the next complete frame, or nullopt when more bytes are needed.
  // Throws FrameError on desync, corruption or size violations.
  std::optional<Envelope> Next();
  // Bytes received but not yet consumed.
  std::size_t buffered() const { return buffer_.size() - read_pos_; }

 private:
  std::vector<std::uint8_t> buffer_;
  std::size_t read_pos_ = 0;
};

}  // namespace jubileo::bus

#endif  // JUBILEO_BUS_ENVELOPE_HPP_
