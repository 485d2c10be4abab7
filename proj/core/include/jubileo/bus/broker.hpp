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

#ifndef JUBILEO_BUS_BROKER_HPP_
#define JUBILEO_BUS_BROKER_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <unordered_map>
#include <vector>

#include "jubileo/bus/envelope.hpp"

namespace jubileo::bus {

using ConnectionId = std::uint64_t;

struct Delivery {
  ConnectionId to;
  // Deliveries produced by one PUBLISH share the same envelope.
  std::shared_ptr<const Envelope> envelope;
};

struct TopicCounters {
  std::uint64_t published = 0;
  std::uint64_t delivered = 0;
};

// Routing table of the star-topology broker. Transport-free so it can be
// driven directly by tests; BrokerServer wraps it with sockets.
class BrokerState {
 public:
  void AddClient(ConnectionId id);
  // Removes the client from every subscription list.
  void RemoveClient(ConnectionId id);

  // Applies one inbound envelope and returns what must be sent where.
  // PUBLISH fans out to current subscribers of the exact topic, SUBSCRIBE and
  // UNSUBSCRIBE edit the table, PING is answered with PONG, anything else is
  // answered with ERROR.
  std::vector<Delivery> Dispatch(ConnectionId from, const Envelope& envelope);

  const std::vector<ConnectionId>& Subscribers(const TopicName& topic) const;
  TopicCounters Counters(const TopicName& topic) const;
  const std::set<ConnectionId>& clients() const { return clients_; }

 private:
  std::set<ConnectionId> clients_;
  std::unordered_map<TopicName, std::vector<ConnectionId>> subscriptions_;
  std::unordered_map<TopicName, TopicCounters> counters_;
};

}  // namespace jubileo::bus

#endif  // JUBILEO_BUS_BROKER_HPP_
