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

#ifndef JUBILEO_MODEL_SERVO_FRAME_HPP_
#define JUBILEO_MODEL_SERVO_FRAME_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "jubileo/model/calibration.hpp"

namespace jubileo::model {

// Microcontroller frame:
//   0xAA | count | count x (channel u8, pulse u16 little-endian) | xor
// where the trailing byte is the XOR of every preceding byte.
inline constexpr std::uint8_t kServoFrameHeader = 0xAA;
inline constexpr std::size_t kMaxServoEntries = 16;

class ServoFrameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ServoFrameError for more than 16 entries or a pulse outside
// [500, 2500] us.
std::vector<std::uint8_t> EncodeServoFrame(std::span<const ServoCommand> entries);

// Throws ServoFrameError on a bad header, length mismatch, checksum mismatch
// or out-of-range pulse.
std::vector<ServoCommand> DecodeServoFrame(std::span<const std::uint8_t> bytes);

}  // namespace jubileo::model

#endif  // JUBILEO_MODEL_SERVO_FRAME_HPP_
