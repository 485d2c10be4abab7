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

#ifndef JUBILEO_BUS_CRC32_HPP_
#define JUBILEO_BUS_CRC32_HPP_

#include <cstdint>
#include <span>

namespace jubileo::bus {

// CRC-32 as used by zip/gzip/PNG: reflected polynomial 0xEDB88320,
// initial value 0xFFFFFFFF, final XOR 0xFFFFFFFF.
std::uint32_t Crc32(std::span<const std::uint8_t> bytes);

// Incremental form. Start with kCrc32Init, feed chunks, finish with
// Crc32Finish.
inline constexpr std::uint32_t kCrc32Init = 0xFFFFFFFFu;
std::uint32_t Crc32Update(std::uint32_t state, std::span<const std::uint8_t> bytes);
inline std::uint32_t Crc32Finish(std::uint32_t state) { return state ^ 0xFFFFFFFFu; }

}  // namespace jubileo::bus

#endif  // JUBILEO_BUS_CRC32_HPP_
