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

#ifndef JUBILEO_COMMON_COLOR_HPP_
#define JUBILEO_COMMON_COLOR_HPP_

#include <array>
#include <optional>
#include <string_view>

namespace jubileo {

// The closed color set shared by scene objects and spoken commands.
enum class Color { kRed, kGreen, kBlue, kYellow };

inline constexpr std::array<Color, 4> kAllColors = {Color::kRed, Color::kGreen, Color::kBlue,
                                                    Color::kYellow};

std::string_view ColorName(Color color);
std::optional<Color> ParseColor(std::string_view lowercase_name);

}  // namespace jubileo

#endif  // JUBILEO_COMMON_COLOR_HPP_
