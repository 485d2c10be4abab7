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

#ifndef JUBILEO_SRC_BUS_SOCKET_UTIL_HPP_
#define JUBILEO_SRC_BUS_SOCKET_UTIL_HPP_

#include <cstdint>

#include "jubileo/bus/address.hpp"

namespace jubileo::bus::detail {

// All helpers throw std::system_error.
int ListenTcp(const Address& address, int backlog = 64);
int ConnectTcp(const Address& address);
std::uint16_t LocalPort(int fd);
void SetNonBlocking(int fd);
void SetNoDelay(int fd);
void MakeWakePipe(int fds[2]);
void CloseFd(int& fd);

}  // namespace jubileo::bus::detail

#endif  // JUBILEO_SRC_BUS_SOCKET_UTIL_HPP_
