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

#ifndef JUBILEO_BUS_BROKER_SERVER_HPP_
#define JUBILEO_BUS_BROKER_SERVER_HPP_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>

#include "jubileo/bus/address.hpp"
#include "jubileo/bus/broker.hpp"

namespace jubileo::bus {

struct BrokerOptions {
  Address listen{"127.0.0.1", kDefaultBrokerPort};  // port 0 picks a free port
  // Per-connection outbound queue cap; a subscriber that falls further behind
  // is disconnected.
  std::size_t max_outbound_queue = 1024;
};

struct BrokerStats {
  std::uint64_t accepted = 0;
  std::uint64_t closed = 0;
  std::uint64_t evicted = 0;
  std::uint64_t frame_errors = 0;
};

// Single-threaded poll() loop around BrokerState. Each inbound frame is
// dispatched atomically with respect to subscription changes.
class BrokerServer {
 public:
  // Binds and listens immediately; throws std::system_error (e.g. port in use).
  explicit BrokerServer(BrokerOptions options);
  ~BrokerServer();
  BrokerServer(const BrokerServer&) = delete;
  BrokerServer& operator=(const BrokerServer&) = delete;

  std::uint16_t port() const { return port_; }

  // Serves until Stop() is called.
  void Run();
  // Safe to call from any thread, including before Run().
  void Stop();

  BrokerStats stats() const;
  TopicCounters Counters(const TopicName& topic) const;

 private:
  struct Connection;

  void AcceptPending();
  void HandleReadable(Connection& c);
  void HandleWritable(Connection& c);
  void Enqueue(ConnectionId to, const std::shared_ptr<const std::vector<std::uint8_t>>& bytes);
  void Drop(ConnectionId id);

  BrokerOptions options_;
  int listen_fd_ = -1;
  int wake_fds_[2] = {-1, -1};
  std::uint16_t port_ = 0;
  std::atomic<bool> stop_{false};

  mutable std::mutex mu_;  // guards state_ and stats_ for observers
  BrokerState state_;
  BrokerStats stats_;
  ConnectionId next_id_ = 1;
  std::vector<std::unique_ptr<Connection>> connections_;
};

}  // namespace jubileo::bus

#endif  // JUBILEO_BUS_BROKER_SERVER_HPP_
