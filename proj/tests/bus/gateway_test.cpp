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

#include <gtest/gtest.h>

#include <boost/asio/connect.hpp>
#include <boost/asio/ip/tcp.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <mutex>
#include <thread>

#include "jubileo/bus/broker_server.hpp"
#include "jubileo/bus/client.hpp"
#include "jubileo/bus/gateway.hpp"
#include "support/gen.hpp"

namespace jubileo::bus {
namespace {

namespace beast = boost::beast;
namespace asio = boost::asio;

TEST(GatewayTranslate, OneLineWithEmbeddedPayload) {
  const auto line = GatewayTranslate(MakeEnvelope(MessageKind::kPublish, "/behavior/state", R"({"state":"Idle"})"));
  EXPECT_EQ(line.find('\n'), std::string::npos);
  const auto j = nlohmann::json::parse(line);
  EXPECT_EQ(j["topic"], "/behavior/state");
  EXPECT_EQ(j["kind"], "publish");
  EXPECT_EQ(j["payload"], R"({"state":"Idle"})");
}

TEST(GatewayTranslate, RoundTripRandomUtf8) {
  testing::Gen gen(5);
  const std::vector<std::string> extras = {"\xC3\xA9", "\xE2\x82\xAC", "\xF0\x9F\x99\x82", "\n", "\"", "\\"};
  for (int i = 0; i < 1000; ++i) {
    std::string payload = gen.Text(40);
    if (gen.Coin()) payload += gen.Pick(extras);
    const Envelope e = MakeEnvelope(MessageKind::kPublish, gen.Topic(), payload);
    ASSERT_EQ(GatewayUntranslate(GatewayTranslate(e)), e) << payload;
  }
}

TEST(GatewayTranslate, BinaryPayloadRejected) {
  Envelope e = MakeEnvelope(MessageKind::kPublish, "/x", "");
  e.payload = {0xFF, 0xFE, 0x00};
  EXPECT_THROW(GatewayTranslate(e), TranslationError);
  e.payload = {0xC3};  // truncated sequence
  EXPECT_THROW(GatewayTranslate(e), TranslationError);
}

TEST(GatewayTranslate, MalformedLinesRejected) {
  EXPECT_THROW(GatewayUntranslate("not json"), TranslationError);
  EXPECT_THROW(GatewayUntranslate(R"({"topic":"/x","kind":"publish"})"), TranslationError);
  EXPECT_THROW(GatewayUntranslate(R"({"topic":"/x","kind":"shout","payload":""})"), TranslationError);
  EXPECT_THROW(GatewayUntranslate(R"({"topic":"bad","kind":"publish","payload":""})"), TranslationError);
}

TEST(GatewayServerTest, BridgesBothDirections) {
  BrokerServer broker(BrokerOptions{{"127.0.0.1", 0}});
  std::thread broker_thread([&] { broker.Run(); });
  const Address bus_address{"127.0.0.1", broker.port()};

  GatewayServer gateway(GatewayOptions{{"127.0.0.1", 0}, bus_address, {"/behavior/state", "/speech/command_text"}});
  std::thread gateway_thread([&] { gateway.Run(); });

  BusClient bus(bus_address);
  std::mutex mu;
  std::vector<std::string> commands;
  bus.Subscribe("/speech/command_text", [&](const Envelope& e) {
    std::lock_guard lock(mu);
    commands.emplace_back(e.payload_view());
  });
  bus.Subscribe("/face/pose_cmd", [&](const Envelope& e) {
    std::lock_guard lock(mu);
    commands.emplace_back("leaked " + std::string(e.payload_view()));
  });
  bus.Sync();

  asio::io_context ioc;
  asio::ip::tcp::resolver resolver(ioc);
  beast::websocket::stream<asio::ip::tcp::socket> ws(ioc);
  asio::connect(ws.next_layer(), resolver.resolve("127.0.0.1", std::to_string(gateway.port())));
  ws.handshake("127.0.0.1", "/");
  for (int i = 0; i < 100 && gateway.stats().sessions == 0; ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }

  bus.Publish("/behavior/state", R"({"state":"Idle"})");
  bus.Publish("/world/objects", "{}");  // not allowlisted
  beast::flat_buffer buffer;
  ws.read(buffer);
  const auto line = beast::buffers_to_string(buffer.data());
  EXPECT_EQ(GatewayUntranslate(line), MakeEnvelope(MessageKind::kPublish, "/behavior/state", R"({"state":"Idle"})"));

  ws.text(true);
  ws.write(asio::buffer(GatewayTranslate(MakeEnvelope(MessageKind::kPublish, "/speech/command_text", "look at me"))));
  ws.write(asio::buffer(GatewayTranslate(MakeEnvelope(MessageKind::kPublish, "/face/pose_cmd", "{}"))));
  ws.write(asio::buffer(std::string("garbage")));
  for (int i = 0; i < 200; ++i) {
    const auto s = gateway.stats();
    if (s.forwarded_to_bus >= 1 && s.rejected >= 1 && s.translation_errors >= 1) break;
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  bus.Sync();
  {
    std::lock_guard lock(mu);
    EXPECT_EQ(commands, std::vector<std::string>{"look at me"});
  }
  const auto stats = gateway.stats();
  EXPECT_EQ(stats.forwarded_to_bus, 1u);
  EXPECT_EQ(stats.rejected, 1u);
  EXPECT_EQ(stats.translation_errors, 1u);

  ws.close(beast::websocket::close_code::normal);
  gateway.Stop();
  gateway_thread.join();
  broker.Stop();
  broker_thread.join();
}

}  // namespace
}  // namespace jubileo::bus
