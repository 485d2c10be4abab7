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

#ifndef JUBILEO_BUS_CLIENT_HPP_
#define JUBILEO_BUS_CLIENT_HPP_

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "jubileo/bus/address.hpp"
#include "jubileo/bus/envelope.hpp"

namespace jubileo::bus {

// Connection to the broker. Sends are serialized through an internal mutex so
// one client may be shared between threads; handlers run one at a time on the
// client's receive thread.
class BusClient {
 public:
  using Handler = std::function<void(const Envelope&)>;

  // Connects synchronously; throws std::system_error on failure.
  explicit BusClient(const Address& broker);
  ~BusClient();
  BusClient(const BusClient&) = delete;
  BusClient& operator=(const BusClient&) = delete;

  // Adds a handler for `topic`; the first handler for a topic sends SUBSCRIBE.
  void Subscribe(std::string_view topic, Handler handler);
  void Unsubscribe(std::string_view topic);

  void Publish(std::string_view topic, std::string_view payload);
  void Publish(std::string_view topic, std::span<const std::uint8_t> payload);
  // Sends an arbitrary envelope (tests use this to exercise broker errors).
  void SendRaw(std::span<const std::uint8_t> frame);

  // Round-trips a PING. When it returns true every earlier SUBSCRIBE from this
  // client is in effect at the broker.
  bool Sync(std::chrono::milliseconds timeout = std::chrono::milliseconds(2000));

  void OnError(Handler handler);
  void OnDisconnect(std::function<void()> callback);

  bool connected() const { return connected_.load(); }
  void Close();

 private:
  void ReadLoop();
  void Send(const std::vector<std::uint8_t>& frame);
  void HandleEnvelope(const Envelope& envelope);

  int fd_ = -1;
  int wake_fds_[2] = {-1, -1};
  std::atomic<bool> connected_{false};
  std::atomic<bool> closing_{false};

  std::mutex send_mu_;
  std::mutex handlers_mu_;
  std::map<std::string, std::vector<Handler>, std::less<>> handlers_;
  Handler error_handler_;
  std::function<void()> disconnect_callback_;

  std::mutex ping_mu_;
  std::condition_variable ping_cv_;
  std::uint64_t ping_counter_ = 0;
  std::uint64_t last_pong_ = 0;

  std::thread reader_;
};

}  // namespace jubileo::bus

#endif  // JUBILEO_BUS_CLIENT_HPP_
