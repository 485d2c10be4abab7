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

#include "jubileo/common/color.hpp"

namespace jubileo {
namespace {

constexpr std::array<std::string_view, 4> kNames = {"red", "green", "blue", "yellow"};

}  // namespace

std::string_view ColorName(Color color) { return kNames[static_cast<int>(color)]; }

std::optional<Color> ParseColor(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Color>(i);
  }
  return std::nullopt;
}

}  // namespace jubileo
