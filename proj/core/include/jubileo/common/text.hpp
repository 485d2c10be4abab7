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

#ifndef JUBILEO_COMMON_TEXT_HPP_
#define JUBILEO_COMMON_TEXT_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jubileo {

// Throws std::runtime_error when the file cannot be read.
std::string ReadTextFile(const std::filesystem::path& path);

std::string_view Trim(std::string_view text);
std::vector<std::string_view> SplitWhitespace(std::string_view text);
std::vector<std::string_view> SplitLines(std::string_view text);

// Whole-string numeric parse; nullopt on any trailing garbage or non-finite.
std::optional<double> ParseNumber(std::string_view text);

// Shortest text that reads back as exactly `value`.
std::string FormatNumber(double value);

}  // namespace jubileo

#endif  // JUBILEO_COMMON_TEXT_HPP_
