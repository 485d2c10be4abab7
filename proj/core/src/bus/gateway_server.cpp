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

#include <boost/asio/ip/tcp.hpp>
#include <boost/asio/post.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

#include <deque>
#include <set>

#include "jubileo/bus/client.hpp"
#include "jubileo/bus/gateway.hpp"
#include "jubileo/common/log.hpp"

namespace jubileo::bus {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

namespace {

struct Counters {
  std::atomic<std::uint64_t> sessions{0};
  std::atomic<std::uint64_t> to_browser{0};
  std::atomic<std::uint64_t> to_bus{0};
  std::atomic<std::uint64_t> translation_errors{0};
  std::atomic<std::uint64_t> rejected{0};
};

class Session : public std::enable_shared_from_this<Session> {
 public:
  using InboundFn = std::function<void(std::string)>;
  using ClosedFn = std::function<void(const std::shared_ptr<Session>&)>;

  Session(tcp::socket socket, InboundFn on_inbound, ClosedFn on_closed)
      : ws_(std::move(socket)), on_inbound_(std::move(on_inbound)), on_closed_(std::move(on_closed)) {}

  void Start() {
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.async_accept([self = shared_from_this()](beast::error_code ec) {
      if (ec) return self->Finish();
      self->open_ = true;
      self->Read();
    });
  }

  // Must be called on the io_context thread.
  void Send(std::shared_ptr<const std::string> text) {
    if (!open_) return;
    queue_.push_back(std::move(text));
    if (queue_.size() == 1) Write();
  }

  void Close() {
    if (!open_) return;
    open_ = false;
    ws_.async_close(websocket::close_code::going_away,
                    [self = shared_from_this()](beast::error_code) {});
  }

 private:
  void Read() {
    ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) return self->Finish();
      self->on_inbound_(beast::buffers_to_string(self->buffer_.data()));
      self->buffer_.consume(self->buffer_.size());
      self->Read();
    });
  }

  void Write() {
    ws_.text(true);
    ws_.async_write(asio::buffer(*queue_.front()),
                    [self = shared_from_this()](beast::error_code ec, std::size_t) {
                      if (ec) return self->Finish();
                      self->queue_.pop_front();
                      if (!self->queue_.empty()) self->Write();
                    });
  }

  void Finish() {
    open_ = false;
    queue_.clear();
    if (on_closed_) {
      auto fn = std::move(on_closed_);
      fn(shared_from_this());
    }
  }

  websocket::stream<tcp::socket> ws_;
  beast::flat_buffer buffer_;
  std::deque<std::shared_ptr<const std::string>> queue_;
  InboundFn on_inbound_;
  ClosedFn on_closed_;
  bool open_ = false;
};

}  // namespace

struct GatewayServer::Impl {
  explicit Impl(GatewayOptions opts)
      : options(std::move(opts)), acceptor(ioc), bus(options.broker) {
    const tcp::endpoint endpoint(asio::ip::make_address(options.listen.host), options.listen.port);
    acceptor.open(endpoint.protocol());
    acceptor.set_option(asio::socket_base::reuse_address(true));
    acceptor.bind(endpoint);
    acceptor.listen();
    for (const auto& topic : options.allowlist) {
      bus.Subscribe(topic, [this](const Envelope& e) { FromBus(e); });
    }
    bus.Sync();
  }

  void FromBus(const Envelope& envelope) {
    std::shared_ptr<const std::string> text;
    try {
      text = std::make_shared<const std::string>(GatewayTranslate(envelope));
    } catch (const TranslationError& e) {
      ++counters.translation_errors;
      Log(LogLevel::kWarning, "gateway", e.what());
      return;
    }
    asio::post(ioc, [this, text] {
      for (const auto& s : sessions) {
        s->Send(text);
        ++counters.to_browser;
      }
    });
  }

  void FromBrowser(const std::string& line) {
    try {
      const Envelope envelope = GatewayUntranslate(line);
      if (envelope.kind != MessageKind::kPublish ||
          !options.allowlist.contains(envelope.topic.str())) {
        ++counters.rejected;
        return;
      }
      bus.Publish(envelope.topic.str(), envelope.payload);
      ++counters.to_bus;
    } catch (const TranslationError& e) {
      ++counters.translation_errors;
      Log(LogLevel::kWarning, "gateway", e.what());
    }
  }

  void Accept() {
    acceptor.async_accept([this](beast::error_code ec, tcp::socket socket) {
      if (ec) return;  // acceptor closed
      auto session = std::make_shared<Session>(
          std::move(socket), [this](std::string line) { FromBrowser(line); },
          [this](const std::shared_ptr<Session>& s) { sessions.erase(s); });
      sessions.insert(session);
      ++counters.sessions;
      session->Start();
      Accept();
    });
  }

  GatewayOptions options;
  asio::io_context ioc;
  tcp::acceptor acceptor;
  BusClient bus;
  std::set<std::shared_ptr<Session>> sessions;
  Counters counters;
};

GatewayServer::GatewayServer(GatewayOptions options) {
  try {
    impl_ = std::make_unique<Impl>(std::move(options));
  } catch (const boost::system::system_error& e) {
    throw std::system_error(e.code().value(), std::generic_category(),
                            std::string("gateway listen: ") + e.what());
  }
}

GatewayServer::~GatewayServer() {
  if (impl_) impl_->bus.Close();
}

std::uint16_t GatewayServer::port() const { return impl_->acceptor.local_endpoint().port(); }

void GatewayServer::Run() {
  impl_->Accept();
  auto guard = asio::make_work_guard(impl_->ioc);
  impl_->ioc.run();
}

void GatewayServer::Stop() {
  asio::post(impl_->ioc, [impl = impl_.get()] {
    beast::error_code ec;
    impl->acceptor.close(ec);
    for (const auto& s : std::vector(impl->sessions.begin(), impl->sessions.end())) s->Close();
    impl->ioc.stop();
  });
}

GatewayStats GatewayServer::stats() const {
  const auto& c = impl_->counters;
  return GatewayStats{c.sessions.load(), c.to_browser.load(), c.to_bus.load(),
                      c.translation_errors.load(), c.rejected.load()};
}

}  // namespace jubileo::bus
