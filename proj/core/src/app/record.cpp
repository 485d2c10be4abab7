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

#include "jubileo/app/record.hpp"

#include <nlohmann/json.hpp>
#include <thread>

#include "jubileo/bus/gateway.hpp"
#include "jubileo/bus/topic.hpp"
#include "jubileo/common/text.hpp"

namespace jubileo::app {
namespace {

using nlohmann::json;

std::string ToHex(std::string_view bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xF]);
  }
  return out;
}

std::optional<std::string> FromHex(std::string_view hex) {
  if (hex.size() % 2 != 0) return std::nullopt;
  std::string out;
  const auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = nibble(hex[i]);
    const int lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out.push_back(static_cast<char>(hi * 16 + lo));
  }
  return out;
}

}  // namespace

std::string FormatRecord(const LogRecord& r) {
  json doc{{"t", r.t}, {"dir", r.inbound ? "in" : "out"}, {"kind", bus::KindName(r.kind)}, {"topic", r.topic}};
  if (bus::IsValidUtf8(r.payload)) {
    doc["payload"] = r.payload;
  } else {
    doc["payload_hex"] = ToHex(r.payload);
  }
  return doc.dump();
}

LogRecord ParseRecord(std::string_view text, int line) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error&) {
    throw RecordError("not a JSON object", line);
  }
  if (!doc.is_object()) throw RecordError("not a JSON object", line);
  LogRecord r;
  const auto t = doc.find("t");
  if (t == doc.end() || !t->is_number() || !(t->get<double>() >= 0.0)) throw RecordError("bad 't'", line);
  r.t = t->get<double>();
  const auto dir = doc.find("dir");
  if (dir == doc.end() || !dir->is_string() || (*dir != "in" && *dir != "out")) {
    throw RecordError("'dir' must be \"in\" or \"out\"", line);
  }
  r.inbound = *dir == "in";
  const auto kind = doc.find("kind");
  if (kind == doc.end() || !kind->is_string()) throw RecordError("missing 'kind'", line);
  const auto parsed_kind = bus::KindFromName(kind->get<std::string>());
  if (!parsed_kind) throw RecordError("unknown kind", line);
  r.kind = *parsed_kind;
  const auto topic = doc.find("topic");
  if (topic == doc.end() || !topic->is_string() || !bus::TopicName::IsValid(topic->get<std::string>())) {
    throw RecordError("bad 'topic'", line);
  }
  r.topic = topic->get<std::string>();
  if (const auto p = doc.find("payload"); p != doc.end() && p->is_string()) {
    r.payload = p->get<std::string>();
  } else if (const auto h = doc.find("payload_hex"); h != doc.end() && h->is_string()) {
    auto bytes = FromHex(h->get<std::string>());
    if (!bytes) throw RecordError("bad 'payload_hex'", line);
    r.payload = std::move(*bytes);
  } else {
    throw RecordError("missing 'payload'", line);
  }
  return r;
}

std::vector<LogRecord> ParseLog(std::string_view text) {
  std::vector<LogRecord> records;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    LogRecord r = ParseRecord(line, line_no);
    if (!records.empty() && r.t < records.back().t) throw RecordError("timestamp goes backwards", line_no);
    records.push_back(std::move(r));
  }
  return records;
}

std::set<std::string, std::less<>> DefaultInboundTopics() {
  return {std::string(bus::topics::kFacePoseCmd), std::string(bus::topics::kArmTrajectory),
          std::string(bus::topics::kWorldMoveObject)};
}

std::vector<std::string> DefaultRecordTopics() {
  std::vector<std::string> out;
  for (auto t : {bus::topics::kFacePoseCmd, bus::topics::kFacePoseState, bus::topics::kCameraDetections,
                 bus::topics::kSpeechCommandText, bus::topics::kSpeechSay, bus::topics::kBehaviorState,
                 bus::topics::kWorldObjects, bus::topics::kWorldMoveObject, bus::topics::kArmTrajectory,
                 bus::topics::kIdentityEvents}) {
    out.emplace_back(t);
  }
  return out;
}

Recorder::Recorder(const bus::Address& broker, const std::filesystem::path& out, std::vector<std::string> topics,
                   std::set<std::string, std::less<>> inbound)
    : out_(out, std::ios::binary | std::ios::trunc),
      start_(std::chrono::steady_clock::now()),
      inbound_(std::move(inbound)),
      client_(broker) {
  if (!out_) throw std::ios_base::failure("cannot open " + out.string());
  for (const auto& topic : topics) {
    client_.Subscribe(topic, [this](const bus::Envelope& env) {
      LogRecord r;
      r.t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      r.topic = env.topic.str();
      r.inbound = inbound_.contains(r.topic);
      r.kind = env.kind;
      r.payload = std::string(env.payload_view());
      std::lock_guard lock(mu_);
      if (!out_.is_open()) return;
      out_ << FormatRecord(r) << '\n';
      out_.flush();
      ++count_;
    });
  }
  client_.Sync();
}

Recorder::~Recorder() { Close(); }

void Recorder::Close() {
  client_.Close();
  std::lock_guard lock(mu_);
  if (out_.is_open()) out_.close();
}

std::uint64_t Replay(const bus::Address& broker, const std::vector<LogRecord>& records,
                     const ReplayOptions& options, const std::atomic<bool>* stop) {
  bus::BusClient client(broker);
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t sent = 0;
  for (const auto& r : records) {
    if (!r.inbound || r.kind != bus::MessageKind::kPublish) continue;
    if (stop != nullptr && stop->load()) break;
    if (options.speed > 0.0) {
      const double at = r.t / options.speed - options.lead;
      if (at > 0.0) {
        const auto due = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                     std::chrono::duration<double>(at));
        while (std::chrono::steady_clock::now() < due) {
          if (stop != nullptr && stop->load()) return sent;
          std::this_thread::sleep_until(std::min(due, std::chrono::steady_clock::now() + std::chrono::milliseconds(50)));
        }
      }
    }
    client.Publish(r.topic, r.payload);
    ++sent;
  }
  client.Sync();
  client.Close();
  return sent;
}

}  // namespace jubileo::app
