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

#include "jubileo/bus/address.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace jubileo::bus {

Address ParseAddress(std::string_view text, std::uint16_t default_port) {
  Address address{"127.0.0.1", default_port};
  const auto colon = text.rfind(':');
  std::string_view host = text.substr(0, colon);
  if (colon != std::string_view::npos) {
    const std::string_view port_text = text.substr(colon + 1);
    unsigned value = 0;
    const auto [ptr, ec] =
        std::from_chars(port_text.data(), port_text.data() + port_text.size(), value);
    if (ec != std::errc{} || ptr != port_text.data() + port_text.size() || value > 65535) {
      throw std::invalid_argument("bad port in address '" + std::string(text) + "'");
    }
    address.port = static_cast<std::uint16_t>(value);
  }
  if (!host.empty()) address.host = std::string(host);
  return address;
}

Address AddressFromEnv(const char* env_var, std::uint16_t default_port) {
  const char* value = std::getenv(env_var);
  if (value == nullptr || *value == '\0') return Address{"127.0.0.1", default_port};
  return ParseAddress(value, default_port);
}

}  // namespace jubileo::bus
