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

#ifndef JUBILEO_COMMON_LOG_HPP_
#define JUBILEO_COMMON_LOG_HPP_

#include <string_view>

namespace jubileo {

enum class LogLevel { kDebug = 0, kInfo = 1, kWarning = 2, kError = 3, kOff = 4 };

// Messages below this level are dropped. Initialized from JUBILEO_LOG
// (debug|info|warning|error|off), default warning.
void SetLogLevel(LogLevel level);
LogLevel GetLogLevel();

// Writes one line "[level] component: message" to stderr.
void Log(LogLevel level, std::string_view component, std::string_view message);

}  // namespace jubileo

#endif  // JUBILEO_COMMON_LOG_HPP_
