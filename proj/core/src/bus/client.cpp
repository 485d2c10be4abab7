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

#include "jubileo/bus/client.hpp"

#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <system_error>

#include "jubileo/common/log.hpp"
#include "socket_util.hpp"

namespace jubileo::bus {

BusClient::BusClient(const Address& broker) {
  fd_ = detail::ConnectTcp(broker);
  detail::MakeWakePipe(wake_fds_);
  connected_.store(true);
  reader_ = std::thread([this] { ReadLoop(); });
}

BusClient::~BusClient() {
  Close();
  detail::CloseFd(wake_fds_[0]);
  detail::CloseFd(wake_fds_[1]);
}

void BusClient::Close() {
  if (closing_.exchange(true)) {
    if (reader_.joinable() && reader_.get_id() != std::this_thread::get_id()) reader_.join();
    return;
  }
  const char b = 1;
  [[maybe_unused]] auto n = ::write(wake_fds_[1], &b, 1);
  if (reader_.joinable() && reader_.get_id() != std::this_thread::get_id()) reader_.join();
  {
    std::lock_guard lock(send_mu_);
    if (fd_ >= 0) ::shutdown(fd_, SHUT_RDWR);
    detail::CloseFd(fd_);
  }
  connected_.store(false);
}

void BusClient::Subscribe(std::string_view topic, Handler handler) {
  const TopicName name{std::string(topic)};
  bool first = false;
  {
    std::lock_guard lock(handlers_mu_);
    auto& list = handlers_[name.str()];
    first = list.empty();
    list.push_back(std::move(handler));
  }
  if (first) Send(EncodeEnvelope(MessageKind::kSubscribe, name, {}));
}

void BusClient::Unsubscribe(std::string_view topic) {
  const TopicName name{std::string(topic)};
  {
    std::lock_guard lock(handlers_mu_);
    handlers_.erase(name.str());
  }
  Send(EncodeEnvelope(MessageKind::kUnsubscribe, name, {}));
}

void BusClient::Publish(std::string_view topic, std::string_view payload) {
  Publish(topic, std::span(reinterpret_cast<const std::uint8_t*>(payload.data()), payload.size()));
}

void BusClient::Publish(std::string_view topic, std::span<const std::uint8_t> payload) {
  Send(EncodeEnvelope(MessageKind::kPublish, TopicName(std::string(topic)), payload));
}

void BusClient::SendRaw(std::span<const std::uint8_t> frame) {
  Send(std::vector<std::uint8_t>(frame.begin(), frame.end()));
}

bool BusClient::Sync(std::chrono::milliseconds timeout) {
  std::uint64_t token;
  {
    std::lock_guard lock(ping_mu_);
    token = ++ping_counter_;
  }
  const std::string payload = std::to_string(token);
  Send(EncodeEnvelope(MessageKind::kPing, TopicName(std::string(topics::kBusControl)),
                      std::span(reinterpret_cast<const std::uint8_t*>(payload.data()),
                                payload.size())));
  std::unique_lock lock(ping_mu_);
  return ping_cv_.wait_for(lock, timeout,
                           [&] { return last_pong_ >= token || !connected_.load(); }) &&
         connected_.load();
}

void BusClient::OnError(Handler handler) {
  std::lock_guard lock(handlers_mu_);
  error_handler_ = std::move(handler);
}

void BusClient::OnDisconnect(std::function<void()> callback) {
  std::lock_guard lock(handlers_mu_);
  disconnect_callback_ = std::move(callback);
}

void BusClient::Send(const std::vector<std::uint8_t>& frame) {
  std::lock_guard lock(send_mu_);
  if (fd_ < 0 || !connected_.load()) {
    throw std::system_error(std::make_error_code(std::errc::not_connected), "bus send");
  }
  std::size_t sent = 0;
  while (sent < frame.size()) {
    const ssize_t n = ::send(fd_, frame.data() + sent, frame.size() - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw std::system_error(errno, std::generic_category(), "bus send");
    }
    sent += static_cast<std::size_t>(n);
  }
}

void BusClient::HandleEnvelope(const Envelope& envelope) {
  switch (envelope.kind) {
    case MessageKind::kPublish: {
      std::vector<Handler> targets;
      {
        std::lock_guard lock(handlers_mu_);
        auto it = handlers_.find(envelope.topic.str());
        if (it != handlers_.end()) targets = it->second;
      }
      for (const auto& handler : targets) handler(envelope);
      break;
    }
    case MessageKind::kPong: {
      std::uint64_t token = 0;
      try {
        token = std::stoull(std::string(envelope.payload_view()));
      } catch (const std::exception&) {
        break;
      }
      {
        std::lock_guard lock(ping_mu_);
        last_pong_ = std::max(last_pong_, token);
      }
      ping_cv_.notify_all();
      break;
    }
    case MessageKind::kError: {
      Handler handler;
      {
        std::lock_guard lock(handlers_mu_);
        handler = error_handler_;
      }
      if (handler) {
        handler(envelope);
      } else {
        Log(LogLevel::kWarning, "bus", "broker error: " + std::string(envelope.payload_view()));
      }
      break;
    }
    default:
      break;
  }
}

void BusClient::ReadLoop() {
  FrameReader reader;
  std::array<std::uint8_t, 64 * 1024> buf;
  bool running = true;
  while (running && !closing_.load()) {
    std::array<pollfd, 2> fds{{{fd_, POLLIN, 0}, {wake_fds_[0], POLLIN, 0}}};
    const int rc = ::poll(fds.data(), fds.size(), -1);
    if (rc < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (fds[1].revents & POLLIN) break;
    const ssize_t n = ::recv(fd_, buf.data(), buf.size(), 0);
    if (n == 0) break;
    if (n < 0) {
      if (errno == EINTR || errno == EAGAIN) continue;
      break;
    }
    reader.Feed(std::span(buf.data(), static_cast<std::size_t>(n)));
    try {
      while (auto envelope = reader.Next()) HandleEnvelope(*envelope);
    } catch (const FrameError& e) {
      Log(LogLevel::kError, "bus", std::string("dropping broker connection: ") + e.what());
      running = false;
    }
  }
  connected_.store(false);
  ping_cv_.notify_all();
  std::function<void()> callback;
  {
    std::lock_guard lock(handlers_mu_);
    callback = disconnect_callback_;
  }
  if (callback && !closing_.load()) callback();
}

}  // namespace jubileo::bus
