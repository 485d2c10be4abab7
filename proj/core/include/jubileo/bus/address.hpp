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

#ifndef JUBILEO_BUS_ADDRESS_HPP_
#define JUBILEO_BUS_ADDRESS_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace jubileo::bus {

inline constexpr std::uint16_t kDefaultBrokerPort = 17310;
inline constexpr std::uint16_t kDefaultGatewayPort = 17311;

struct Address {
  std::string host = "127.0.0.1";
  std::uint16_t port = kDefaultBrokerPort;

  std::string ToString() const { return host + ":" + std::to_string(port); }
};

// Accepts "host:port", "host" or ":port". Throws std::invalid_argument.
Address ParseAddress(std::string_view text, std::uint16_t default_port);

// Reads `env_var` if set, otherwise returns 127.0.0.1:default_port.
Address AddressFromEnv(const char* env_var, std::uint16_t default_port);

}  // namespace jubileo::bus

#endif  // JUBILEO_BUS_ADDRESS_HPP_
