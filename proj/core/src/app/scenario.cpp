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

#include "jubileo/app/scenario.hpp"

#include <nlohmann/json.hpp>
#include <cmath>
#include <memory>
#include <mutex>
#include <set>
#include <thread>

#include "jubileo/app/assets.hpp"
#include "jubileo/app/behavior_node.hpp"
#include "jubileo/app/sim_node.hpp"
#include "jubileo/bus/broker_server.hpp"
#include "jubileo/bus/topic.hpp"
#include "jubileo/common/log.hpp"
#include "jubileo/common/text.hpp"
#include "jubileo/model/urdf.hpp"

namespace jubileo::app {
namespace {

using nlohmann::json;

constexpr double kTimeEpsilon = 1e-9;

std::optional<CompareOp> ParseOp(std::string_view op) {
  if (op == "==") return CompareOp::kEq;
  if (op == "!=") return CompareOp::kNe;
  if (op == "<") return CompareOp::kLt;
  if (op == "<=") return CompareOp::kLe;
  if (op == ">") return CompareOp::kGt;
  if (op == ">=") return CompareOp::kGe;
  if (op == "contains") return CompareOp::kContains;
  return std::nullopt;
}

std::filesystem::path Resolve(const std::filesystem::path& base, const std::filesystem::path& p) {
  std::error_code ec;
  if (p.is_absolute()) return p;
  if (!base.empty() && std::filesystem::exists(base / p, ec)) return base / p;
  return ResolveDataPath(p);
}

json PayloadJson(std::string_view payload) {
  try {
    return json::parse(payload);
  } catch (const json::parse_error&) {
    return json(std::string(payload));
  }
}

std::string Stringify(const json& value) { return value.dump(); }

}  // namespace

Scenario ParseScenario(std::string_view text, const std::filesystem::path& base_dir) {
  Scenario s;
  s.model = Resolve(base_dir, kDefaultBodyModel);
  bool have_scene = false;
  int line_no = 0;
  double last_at = 0.0;
  for (std::string_view raw : SplitLines(text)) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto words = SplitWhitespace(line);
    const auto rest_after = [&](std::size_t n) {
      // Text after the first n words, untouched.
      std::string_view r = line;
      for (std::size_t i = 0; i < n; ++i) {
        r = Trim(r);
        r.remove_prefix(std::min(r.size(), words[i].size()));
      }
      return Trim(r);
    };
    const auto number = [&](std::string_view w, const char* what) {
      const auto v = ParseNumber(w);
      if (!v || !std::isfinite(*v)) throw ScenarioError(std::string("bad ") + what, line_no);
      return *v;
    };
    if (words[0] == "scene" || words[0] == "registry" || words[0] == "model") {
      if (words.size() != 2) throw ScenarioError("expected '" + std::string(words[0]) + " <path>'", line_no);
      const auto path = Resolve(base_dir, std::string(words[1]));
      if (words[0] == "scene") {
        s.scene = path;
        have_scene = true;
      } else if (words[0] == "registry") {
        s.registry = path;
      } else {
        s.model = path;
      }
    } else if (words[0] == "seed") {
      if (words.size() != 2) throw ScenarioError("expected 'seed <n>'", line_no);
      const double v = number(words[1], "seed");
      if (v < 0 || v != std::floor(v)) throw ScenarioError("seed must be a non-negative integer", line_no);
      s.seed = static_cast<std::uint64_t>(v);
    } else if (words[0] == "duration") {
      if (words.size() != 2) throw ScenarioError("expected 'duration <seconds>'", line_no);
      s.duration = number(words[1], "duration");
      if (!(*s.duration > 0.0)) throw ScenarioError("duration must be positive", line_no);
    } else if (words[0] == "at") {
      if (words.size() < 4) throw ScenarioError("expected 'at <t> publish|expect ...'", line_no);
      ScenarioStep step;
      step.line = line_no;
      step.at = number(words[1], "time");
      if (step.at < 0.0) throw ScenarioError("time must be non-negative", line_no);
      if (step.at < last_at) throw ScenarioError("step times must not decrease", line_no);
      last_at = step.at;
      if (!bus::TopicName::IsValid(words[3])) throw ScenarioError("bad topic '" + std::string(words[3]) + "'", line_no);
      if (words[2] == "publish") {
        const std::string_view body = rest_after(4);
        json payload;
        try {
          payload = json::parse(body);
        } catch (const json::parse_error&) {
          throw ScenarioError("publish payload must be a quoted string or a JSON object", line_no);
        }
        PublishStep p{std::string(words[3]), payload.is_string() ? payload.get<std::string>() : payload.dump()};
        if (!payload.is_string() && !payload.is_object()) {
          throw ScenarioError("publish payload must be a quoted string or a JSON object", line_no);
        }
        step.action = std::move(p);
      } else if (words[2] == "expect") {
        if (words.size() < 8) throw ScenarioError("expected 'expect <topic> <path> <op> <value> within <s>'", line_no);
        ExpectStep e;
        e.topic = std::string(words[3]);
        e.path = std::string(words[4]);
        const auto op = ParseOp(words[5]);
        if (!op) throw ScenarioError("unknown comparison '" + std::string(words[5]) + "'", line_no);
        e.op = *op;
        if (words[words.size() - 2] != "within") throw ScenarioError("expect needs 'within <seconds>'", line_no);
        e.within = number(words.back(), "timeout");
        if (!(e.within > 0.0)) throw ScenarioError("timeout must be positive", line_no);
        std::string_view literal = rest_after(6);
        literal = Trim(literal.substr(0, literal.rfind("within")));
        try {
          e.literal = json::parse(literal).dump();
        } catch (const json::parse_error&) {
          throw ScenarioError("comparison value must be a JSON literal", line_no);
        }
        step.action = std::move(e);
      } else {
        throw ScenarioError("expected 'publish' or 'expect'", line_no);
      }
      s.steps.push_back(std::move(step));
    } else {
      throw ScenarioError("unknown directive '" + std::string(words[0]) + "'", line_no);
    }
  }
  if (!have_scene) throw ScenarioError("scenario needs a 'scene' line", line_no);
  return s;
}

Scenario LoadScenario(const std::filesystem::path& path) {
  return ParseScenario(ReadTextFile(path), path.parent_path());
}

bool EvaluateExpect(const ExpectStep& e, std::string_view payload, std::string* observed) {
  const json doc = PayloadJson(payload);
  const json* value = &doc;
  json holder;
  if (e.path != ".") {
    std::string pointer;
    std::string_view rest = e.path;
    while (!rest.empty()) {
      const auto dot = rest.find('.');
      pointer += "/" + std::string(rest.substr(0, dot));
      if (dot == std::string_view::npos) break;
      rest.remove_prefix(dot + 1);
    }
    try {
      holder = doc.at(json::json_pointer(pointer));
      value = &holder;
    } catch (const json::exception&) {
      if (observed != nullptr) *observed = "<missing>";
      return false;
    }
  }
  if (observed != nullptr) *observed = Stringify(*value);
  const json want = json::parse(e.literal);
  switch (e.op) {
    case CompareOp::kEq: return *value == want;
    case CompareOp::kNe: return *value != want;
    case CompareOp::kContains:
      if (value->is_string() && want.is_string()) {
        return value->get<std::string>().find(want.get<std::string>()) != std::string::npos;
      }
      if (value->is_array()) {
        for (const auto& item : *value) {
          if (item == want) return true;
        }
      }
      return false;
    default: break;
  }
  if (!value->is_number() || !want.is_number()) return false;
  const double a = value->get<double>();
  const double b = want.get<double>();
  switch (e.op) {
    case CompareOp::kLt: return a < b;
    case CompareOp::kLe: return a <= b;
    case CompareOp::kGt: return a > b;
    case CompareOp::kGe: return a >= b;
    default: return false;
  }
}

ScenarioResult RunScenario(const Scenario& scenario, const ScenarioOptions& options) {
  ScenarioResult result;
  BehaviorAssets assets = LoadBehaviorAssets(scenario.model, scenario.registry);

  bus::BrokerServer broker(bus::BrokerOptions{{"127.0.0.1", 0}});
  std::thread broker_thread([&] { broker.Run(); });
  const bus::Address address{"127.0.0.1", broker.port()};

  struct Pending {
    const ScenarioStep* step;
    bool active = false;
    bool done = false;
    std::optional<std::string> last_seen;
  };
  std::mutex mu;
  std::vector<Pending> pending;
  for (const auto& step : scenario.steps) pending.push_back(Pending{&step, false, false, std::nullopt});

  double end_time = scenario.duration.value_or(0.0);
  if (!scenario.duration) {
    for (const auto& step : scenario.steps) {
      const double deadline =
          step.at + (std::holds_alternative<ExpectStep>(step.action) ? std::get<ExpectStep>(step.action).within : 0.0);
      end_time = std::max(end_time, deadline + 0.5);
    }
  }

  std::unique_ptr<BehaviorNode> behavior_node;
  std::unique_ptr<SimNode> sim_node;
  std::thread behavior_thread;
  try {
    behavior_node = std::make_unique<BehaviorNode>(BehaviorNodeOptions{address, {}, 2}, std::move(assets));
    behavior_thread = std::thread([&] { behavior_node->Run(); });

    SimNodeOptions sim_options;
    sim_options.broker = address;
    sim_options.body = model::LoadRobotDescription(scenario.model);
    sim_options.scene = sim::Scene::Load(scenario.scene);
    sim_options.seed = scenario.seed;
    sim_options.time_scale = options.time_scale;
    sim_options.sync_behavior = true;
    sim_node = std::make_unique<SimNode>(std::move(sim_options));
  } catch (...) {
    if (behavior_node) behavior_node->Stop();
    if (behavior_thread.joinable()) behavior_thread.join();
    broker.Stop();
    broker_thread.join();
    throw;
  }

  std::set<std::string> watched;
  for (const auto& step : scenario.steps) {
    if (const auto* e = std::get_if<ExpectStep>(&step.action)) watched.insert(e->topic);
  }
  for (const auto& topic : watched) {
    sim_node->client().Subscribe(topic, [&, topic](const bus::Envelope& env) {
      std::lock_guard lock(mu);
      for (auto& p : pending) {
        const auto* e = std::get_if<ExpectStep>(&p.step->action);
        if (e == nullptr || !p.active || p.done || e->topic != topic) continue;
        std::string observed;
        if (EvaluateExpect(*e, env.payload_view(), &observed)) p.done = true;
        p.last_seen = observed;
      }
    });
  }
  sim_node->client().Sync();

  const auto note = [&](const std::string& line) {
    result.log.push_back(line);
    if (options.verbose) Log(LogLevel::kInfo, "scenario", line);
  };

  sim_node->SetBeforeStep([&](const sim::World& world) {
    for (auto& p : pending) {
      const auto* publish = std::get_if<PublishStep>(&p.step->action);
      if (publish == nullptr || p.done || p.step->at > world.time() + kTimeEpsilon) continue;
      std::string payload = publish->payload;
      if (publish->topic == bus::topics::kWorldMoveObject) {
        // Stamp it so the move lands on the same frame in every run.
        json doc = json::parse(payload, nullptr, false);
        if (doc.is_object() && !doc.contains("apply_seq")) {
          doc["apply_seq"] = world.frame_seq() + 2;
          payload = doc.dump();
        }
      }
      sim_node->client().Publish(publish->topic, payload);
      p.done = true;
      note("t=" + FormatNumber(world.time()) + " publish " + publish->topic + " " + payload);
    }
  });
  sim_node->SetAfterFrame([&](const sim::World& world) {
    bool all_done = true;
    {
      std::lock_guard lock(mu);
      for (auto& p : pending) {
        const auto* e = std::get_if<ExpectStep>(&p.step->action);
        if (e != nullptr && !p.done) {
          if (!p.active && world.time() + kTimeEpsilon >= p.step->at) p.active = true;
          if (p.active && world.time() > p.step->at + e->within + kTimeEpsilon) {
            p.done = true;
            result.failures.push_back("line " + std::to_string(p.step->line) + ": expect " + e->topic + " " +
                                      e->path + " " + e->literal + " not met within " + FormatNumber(e->within) +
                                      " s (last value " + p.last_seen.value_or("<none>") + ")");
          }
        }
        all_done = all_done && p.done;
      }
    }
    if (all_done || world.time() + kTimeEpsilon >= end_time) sim_node->Stop();
  });

  sim_node->Run();

  const sim::World& world = sim_node->world();
  result.sim_time = world.time();
  result.final_world = {world.frame_seq(), world.time(),  world.objects(),
                        world.avatars(),   world.grabbed(), world.EndEffector()};
  result.sync_timeouts = sim_node->sync_timeouts();
  {
    std::lock_guard lock(mu);
    for (auto& p : pending) {
      if (p.done) continue;
      const auto* e = std::get_if<ExpectStep>(&p.step->action);
      result.failures.push_back("line " + std::to_string(p.step->line) + ": " +
                                (e != nullptr ? "expect " + e->topic + " " + e->path + " " + e->literal +
                                                    " never resolved (last value " + p.last_seen.value_or("<none>") + ")"
                                              : std::string("publish never sent")));
    }
  }
  result.passed = result.failures.empty();

  behavior_node->Stop();
  behavior_thread.join();
  sim_node.reset();
  behavior_node.reset();
  broker.Stop();
  broker_thread.join();
  return result;
}

}  // namespace jubileo::app
