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

#ifndef JUBILEO_APP_RECORD_HPP_
#define JUBILEO_APP_RECORD_HPP_

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jubileo/bus/address.hpp"
#include "jubileo/bus/client.hpp"
#include "jubileo/bus/envelope.hpp"

namespace jubileo::app {

// One bus message in a session log. `inbound` marks messages that feed the
// simulator, the ones replay re-publishes.
struct LogRecord {
  double t = 0.0;  // seconds since the session started
  bool inbound = false;
  bus::MessageKind kind = bus::MessageKind::kPublish;
  std::string topic;
  std::string payload;

  friend bool operator==(const LogRecord&, const LogRecord&) = default;
};

class RecordError : public std::runtime_error {
 public:
  RecordError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// One JSON object per line:
//   {"t":0.5,"dir":"in","kind":"publish","topic":"/face/pose_cmd","payload":"..."}
// Payloads that are not UTF-8 are written hex-encoded under "payload_hex".
std::string FormatRecord(const LogRecord& record);
// Throws RecordError carrying `line`.
LogRecord ParseRecord(std::string_view text, int line = 1);
// Validates the whole document first; blank lines are skipped. Also
// rejects decreasing timestamps.
std::vector<LogRecord> ParseLog(std::string_view text);

// Topics the simulator consumes.
std::set<std::string, std::less<>> DefaultInboundTopics();
// Every topic in the catalog.
std::vector<std::string> DefaultRecordTopics();

class Recorder {
 public:
  // Subscribes immediately; throws std::system_error or std::ios_base::failure.
  Recorder(const bus::Address& broker, const std::filesystem::path& out, std::vector<std::string> topics,
           std::set<std::string, std::less<>> inbound = DefaultInboundTopics());
  ~Recorder();

  std::uint64_t count() const { return count_.load(); }
  void Close();

 private:
  std::mutex mu_;
  std::ofstream out_;
  std::chrono::steady_clock::time_point start_;
  std::set<std::string, std::less<>> inbound_;
  std::atomic<std::uint64_t> count_{0};
  bus::BusClient client_;
};

struct ReplayOptions {
  double speed = 1.0;  // 0 publishes as fast as possible
  double lead = 0.0;   // seconds every record is sent early
};

// Publishes the inbound records in order at t / speed - lead after the
// call; returns how many were sent. Stops early when `stop` becomes true.
std::uint64_t Replay(const bus::Address& broker, const std::vector<LogRecord>& records,
                     const ReplayOptions& options, const std::atomic<bool>* stop = nullptr);

}  // namespace jubileo::app

#endif  // JUBILEO_APP_RECORD_HPP_
