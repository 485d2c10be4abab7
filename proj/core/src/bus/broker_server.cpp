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

#include "jubileo/bus/broker_server.hpp"

#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <deque>
#include <map>
#include <string>

#include "jubileo/common/log.hpp"
#include "socket_util.hpp"

namespace jubileo::bus {

using Bytes = std::shared_ptr<const std::vector<std::uint8_t>>;

struct BrokerServer::Connection {
  ConnectionId id = 0;
  int fd = -1;
  FrameReader reader;
  std::deque<Bytes> outbound;
  std::size_t front_offset = 0;
  bool dead = false;
};

BrokerServer::BrokerServer(BrokerOptions options) : options_(std::move(options)) {
  listen_fd_ = detail::ListenTcp(options_.listen);
  detail::SetNonBlocking(listen_fd_);
  port_ = detail::LocalPort(listen_fd_);
  detail::MakeWakePipe(wake_fds_);
}

BrokerServer::~BrokerServer() {
  for (auto& c : connections_) detail::CloseFd(c->fd);
  detail::CloseFd(listen_fd_);
  detail::CloseFd(wake_fds_[0]);
  detail::CloseFd(wake_fds_[1]);
}

void BrokerServer::Stop() {
  stop_.store(true);
  const char b = 1;
  [[maybe_unused]] auto n = ::write(wake_fds_[1], &b, 1);
}

BrokerStats BrokerServer::stats() const {
  std::lock_guard lock(mu_);
  return stats_;
}

TopicCounters BrokerServer::Counters(const TopicName& topic) const {
  std::lock_guard lock(mu_);
  return state_.Counters(topic);
}

void BrokerServer::Run() {
  std::vector<pollfd> fds;
  while (!stop_.load()) {
    fds.clear();
    fds.push_back({listen_fd_, POLLIN, 0});
    fds.push_back({wake_fds_[0], POLLIN, 0});
    for (const auto& c : connections_) {
      short events = POLLIN;
      if (!c->outbound.empty()) events |= POLLOUT;
      fds.push_back({c->fd, events, 0});
    }
    const int rc = ::poll(fds.data(), fds.size(), 500);
    if (rc < 0) {
      if (errno == EINTR) continue;
      Log(LogLevel::kError, "broker", "poll failed");
      break;
    }
    if (fds[1].revents & POLLIN) {
      std::array<char, 64> drain;
      while (::read(wake_fds_[0], drain.data(), drain.size()) > 0) {
      }
    }
    // Connections may be appended by AcceptPending; only visit the ones polled.
    const std::size_t polled = fds.size() - 2;
    for (std::size_t i = 0; i < polled; ++i) {
      Connection& c = *connections_[i];
      const short revents = fds[i + 2].revents;
      if (c.dead) continue;
      if (revents & (POLLIN | POLLHUP | POLLERR)) HandleReadable(c);
      if (!c.dead && (revents & POLLOUT)) HandleWritable(c);
    }
    if (fds[0].revents & POLLIN) AcceptPending();
    std::erase_if(connections_, [](const std::unique_ptr<Connection>& c) { return c->dead; });
  }
}

void BrokerServer::AcceptPending() {
  while (true) {
    const int fd = ::accept4(listen_fd_, nullptr, nullptr, SOCK_NONBLOCK | SOCK_CLOEXEC);
    if (fd < 0) return;
    detail::SetNoDelay(fd);
    auto c = std::make_unique<Connection>();
    c->fd = fd;
    {
      std::lock_guard lock(mu_);
      c->id = next_id_++;
      state_.AddClient(c->id);
      ++stats_.accepted;
    }
    Log(LogLevel::kDebug, "broker", "client " + std::to_string(c->id) + " connected");
    connections_.push_back(std::move(c));
  }
}

void BrokerServer::HandleReadable(Connection& c) {
  std::array<std::uint8_t, 64 * 1024> buf;
  bool closed_by_peer = false;
  while (true) {
    const ssize_t n = ::recv(c.fd, buf.data(), buf.size(), 0);
    if (n > 0) {
      c.reader.Feed(std::span(buf.data(), static_cast<std::size_t>(n)));
      continue;
    }
    if (n < 0 && (errno == EAGAIN || errno == EWOULDBLOCK)) break;
    if (n < 0 && errno == EINTR) continue;
    closed_by_peer = true;  // orderly shutdown or hard error
    break;
  }
  try {
    while (auto envelope = c.reader.Next()) {
      std::vector<Delivery> deliveries;
      {
        std::lock_guard lock(mu_);
        deliveries = state_.Dispatch(c.id, *envelope);
      }
      // Deliveries of one PUBLISH share an envelope; encode it once.
      std::map<const Envelope*, Bytes> encoded;
      for (const auto& d : deliveries) {
        auto [it, inserted] = encoded.try_emplace(d.envelope.get());
        if (inserted) {
          it->second = std::make_shared<const std::vector<std::uint8_t>>(
              EncodeEnvelope(*d.envelope));
        }
        Enqueue(d.to, it->second);
      }
      if (c.dead) return;
    }
  } catch (const FrameError& e) {
    {
      std::lock_guard lock(mu_);
      ++stats_.frame_errors;
    }
    Log(LogLevel::kWarning, "broker",
        "client " + std::to_string(c.id) + " sent bad frame (" +
            std::string(FrameErrcName(e.code())) + "): " + e.what());
    Drop(c.id);
    return;
  }
  if (closed_by_peer) Drop(c.id);
}

void BrokerServer::HandleWritable(Connection& c) {
  while (!c.outbound.empty()) {
    const auto& front = *c.outbound.front();
    const ssize_t n = ::send(c.fd, front.data() + c.front_offset, front.size() - c.front_offset,
                             MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EAGAIN || errno == EWOULDBLOCK) return;
      if (errno == EINTR) continue;
      Drop(c.id);
      return;
    }
    c.front_offset += static_cast<std::size_t>(n);
    if (c.front_offset == front.size()) {
      c.outbound.pop_front();
      c.front_offset = 0;
    }
  }
}

void BrokerServer::Enqueue(ConnectionId to, const Bytes& bytes) {
  for (auto& c : connections_) {
    if (c->id != to || c->dead) continue;
    if (c->outbound.size() >= options_.max_outbound_queue) {
      {
        std::lock_guard lock(mu_);
        ++stats_.evicted;
      }
      Log(LogLevel::kWarning, "broker",
          "client " + std::to_string(to) + " evicted: outbound queue full");
      Drop(to);
      return;
    }
    const bool was_idle = c->outbound.empty();
    c->outbound.push_back(bytes);
    // Opportunistic write keeps latency low; poll picks up the remainder.
    if (was_idle) HandleWritable(*c);
    return;
  }
}

void BrokerServer::Drop(ConnectionId id) {
  for (auto& c : connections_) {
    if (c->id != id || c->dead) continue;
    c->dead = true;
    detail::CloseFd(c->fd);
    std::lock_guard lock(mu_);
    state_.RemoveClient(id);
    ++stats_.closed;
  }
}

}  // namespace jubileo::bus
