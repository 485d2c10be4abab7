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

#ifndef JUBILEO_BUS_GATEWAY_HPP_
#define JUBILEO_BUS_GATEWAY_HPP_

#include <atomic>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jubileo/bus/address.hpp"
#include "jubileo/bus/envelope.hpp"

namespace jubileo::bus {

class TranslationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool IsValidUtf8(std::string_view text);

// Maps an envelope to one line of JSON:
//   {"kind":"publish","payload":"<payload text>","topic":"/behavior/state"}
// The payload is carried as a JSON string so the mapping is exactly
// invertible. Throws TranslationError when the payload is not UTF-8.
std::string GatewayTranslate(const Envelope& envelope);

// Inverse of GatewayTranslate. Throws TranslationError on malformed input.
Envelope GatewayUntranslate(std::string_view line);

struct GatewayOptions {
  Address listen{"127.0.0.1", kDefaultGatewayPort};  // port 0 picks a free port
  Address broker{"127.0.0.1", kDefaultBrokerPort};
  // Topics mirrored to browsers and accepted from them.
  std::set<std::string> allowlist;
};

struct GatewayStats {
  std::uint64_t sessions = 0;
  std::uint64_t forwarded_to_browser = 0;
  std::uint64_t forwarded_to_bus = 0;
  std::uint64_t translation_errors = 0;
  std::uint64_t rejected = 0;  // inbound messages for topics outside the allowlist
};

// Browser-facing WebSocket bridge. Every allowlisted topic is subscribed on
// the bus and each message is pushed to all connected sockets as one text
// frame; text frames from browsers are published back onto the bus.
class GatewayServer {
 public:
  // Connects to the broker and binds the listener; throws std::system_error.
  explicit GatewayServer(GatewayOptions options);
  ~GatewayServer();
  GatewayServer(const GatewayServer&) = delete;
  GatewayServer& operator=(const GatewayServer&) = delete;

  std::uint16_t port() const;
  void Run();   // blocks until Stop()
  void Stop();  // any thread
  GatewayStats stats() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace jubileo::bus

#endif  // JUBILEO_BUS_GATEWAY_HPP_
