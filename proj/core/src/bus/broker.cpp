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

#include "jubileo/bus/broker.hpp"

#include <algorithm>

namespace jubileo::bus {
namespace {

const std::vector<ConnectionId> kNoSubscribers;

}  // namespace

void BrokerState::AddClient(ConnectionId id) { clients_.insert(id); }

void BrokerState::RemoveClient(ConnectionId id) {
  clients_.erase(id);
  for (auto it = subscriptions_.begin(); it != subscriptions_.end();) {
    std::erase(it->second, id);
    it = it->second.empty() ? subscriptions_.erase(it) : std::next(it);
  }
}

std::vector<Delivery> BrokerState::Dispatch(ConnectionId from, const Envelope& envelope) {
  std::vector<Delivery> out;
  switch (envelope.kind) {
    case MessageKind::kPublish: {
      auto& counters = counters_[envelope.topic];
      ++counters.published;
      auto it = subscriptions_.find(envelope.topic);
      if (it == subscriptions_.end()) break;
      auto shared = std::make_shared<const Envelope>(envelope);
      out.reserve(it->second.size());
      for (ConnectionId to : it->second) out.push_back({to, shared});
      counters.delivered += it->second.size();
      break;
    }
    case MessageKind::kSubscribe: {
      auto& list = subscriptions_[envelope.topic];
      if (std::find(list.begin(), list.end(), from) == list.end()) list.push_back(from);
      break;
    }
    case MessageKind::kUnsubscribe: {
      auto it = subscriptions_.find(envelope.topic);
      if (it != subscriptions_.end()) {
        std::erase(it->second, from);
        if (it->second.empty()) subscriptions_.erase(it);
      }
      break;
    }
    case MessageKind::kPong:
    case MessageKind::kError:
      break;
    case MessageKind::kPing:
      out.push_back({from, std::make_shared<const Envelope>(
                               Envelope{MessageKind::kPong, envelope.topic, envelope.payload})});
      break;
    default: {
      const std::string reason =
          "unsupported kind " + std::to_string(static_cast<int>(envelope.kind));
      out.push_back({from, std::make_shared<const Envelope>(Envelope{
                               MessageKind::kError, envelope.topic,
                               std::vector<std::uint8_t>(reason.begin(), reason.end())})});
      break;
    }
  }
  return out;
}

const std::vector<ConnectionId>& BrokerState::Subscribers(const TopicName& topic) const {
  auto it = subscriptions_.find(topic);
  return it == subscriptions_.end() ? kNoSubscribers : it->second;
}

TopicCounters BrokerState::Counters(const TopicName& topic) const {
  auto it = counters_.find(topic);
  return it == counters_.end() ? TopicCounters{} : it->second;
}

}  // namespace jubileo::bus
