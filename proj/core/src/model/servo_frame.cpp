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

#include "jubileo/model/servo_frame.hpp"

#include <string>

namespace jubileo::model {

std::vector<std::uint8_t> EncodeServoFrame(std::span<const ServoCommand> entries) {
  if (entries.size() > kMaxServoEntries) {
    throw ServoFrameError("servo frame holds at most 16 entries, got " +
                          std::to_string(entries.size()));
  }
  std::vector<std::uint8_t> out;
  out.reserve(3 + 3 * entries.size());
  out.push_back(kServoFrameHeader);
  out.push_back(static_cast<std::uint8_t>(entries.size()));
  for (const auto& e : entries) {
    if (e.pulse_us < kMinPulseUs || e.pulse_us > kMaxPulseUs) {
      throw ServoFrameError("pulse " + std::to_string(e.pulse_us) + " us out of range on channel " +
                            std::to_string(e.channel));
    }
    out.push_back(e.channel);
    out.push_back(static_cast<std::uint8_t>(e.pulse_us & 0xFF));
    out.push_back(static_cast<std::uint8_t>(e.pulse_us >> 8));
  }
  std::uint8_t checksum = 0;
  for (const auto b : out) checksum ^= b;
  out.push_back(checksum);
  return out;
}

std::vector<ServoCommand> DecodeServoFrame(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 3) throw ServoFrameError("servo frame too short");
  if (bytes[0] != kServoFrameHeader) throw ServoFrameError("bad servo frame header");
  const std::size_t count = bytes[1];
  if (count > kMaxServoEntries) throw ServoFrameError("servo frame count above 16");
  if (bytes.size() != 3 + 3 * count) throw ServoFrameError("servo frame length mismatch");
  std::uint8_t checksum = 0;
  for (std::size_t i = 0; i + 1 < bytes.size(); ++i) checksum ^= bytes[i];
  if (checksum != bytes.back()) throw ServoFrameError("servo frame checksum mismatch");
  std::vector<ServoCommand> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto* p = bytes.data() + 2 + 3 * i;
    const auto pulse = static_cast<std::uint16_t>(p[1] | (p[2] << 8));
    if (pulse < kMinPulseUs || pulse > kMaxPulseUs) throw ServoFrameError("decoded pulse out of range");
    out.push_back({p[0], pulse});
  }
  return out;
}

}  // namespace jubileo::model
