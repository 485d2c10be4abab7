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

#ifndef JUBILEO_APP_SCENARIO_HPP_
#define JUBILEO_APP_SCENARIO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jubileo/msg/messages.hpp"

namespace jubileo::app {

class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class CompareOp { kEq, kNe, kLt, kLe, kGt, kGe, kContains };

struct PublishStep {
  std::string topic;
  std::string payload;
};

// Satisfied by the first message on `topic`, received after `at`, whose
// value at `path` compares true against `literal` (JSON text) before
// at + within. Path "." is the whole payload; payloads that are not JSON
// count as a string.
struct ExpectStep {
  std::string topic;
  std::string path;
  CompareOp op = CompareOp::kEq;
  std::string literal;
  double within = 1.0;
};

struct ScenarioStep {
  double at = 0.0;  // simulated seconds
  int line = 0;
  std::variant<PublishStep, ExpectStep> action;
};

// Line-oriented script:
//
//   scene scenes/tabletop.json
//   seed 7
//   registry registries/friends.reg      (optional)
//   model models/jubileo_body.urdf       (optional)
//   duration 12                          (optional; default: last deadline + 0.5)
//   at 0.5 publish /speech/command_text "look at me"
//   at 0.5 expect /behavior/state mode == "TrackingFace" within 1
//
// Relative paths resolve against the script's directory, then the data
// directory.
struct Scenario {
  std::filesystem::path scene;
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> registry;
  std::filesystem::path model;
  std::optional<double> duration;
  std::vector<ScenarioStep> steps;
};

Scenario ParseScenario(std::string_view text, const std::filesystem::path& base_dir = {});
Scenario LoadScenario(const std::filesystem::path& path);

struct ScenarioOptions {
  double time_scale = 0.0;  // 0 runs as fast as the nodes allow
  bool verbose = false;
};

struct ScenarioResult {
  bool passed = false;
  std::vector<std::string> failures;
  std::vector<std::string> log;
  double sim_time = 0.0;
  msg::WorldSnapshot final_world;
  std::uint64_t sync_timeouts = 0;
};

// Starts a private broker, sim and behavior node on ephemeral ports and
// plays the script. Throws for unreadable inputs; expectation failures
// are reported in the result.
ScenarioResult RunScenario(const Scenario& scenario, const ScenarioOptions& options = {});

// Evaluates one comparison. Exposed for tests.
bool EvaluateExpect(const ExpectStep& expect, std::string_view payload, std::string* observed = nullptr);

}  // namespace jubileo::app

#endif  // JUBILEO_APP_SCENARIO_HPP_
