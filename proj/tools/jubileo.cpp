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

// jubileo: one binary, one subcommand per node.
//
// Exit codes: 0 success, 1 usage, 2 runtime failure, 3 scenario expectation
// failure.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "jubileo/app/assets.hpp"
#include "jubileo/app/behavior_node.hpp"
#include "jubileo/app/demo.hpp"
#include "jubileo/app/record.hpp"
#include "jubileo/app/robot_node.hpp"
#include "jubileo/app/scenario.hpp"
#include "jubileo/app/sim_node.hpp"
#include "jubileo/behavior/identity.hpp"
#include "jubileo/bus/address.hpp"
#include "jubileo/bus/broker_server.hpp"
#include "jubileo/bus/gateway.hpp"
#include "jubileo/common/text.hpp"
#include "jubileo/model/urdf.hpp"
#include "jubileo/sim/world.hpp"

namespace {

using namespace jubileo;

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitScenario = 3;

std::atomic<bool> g_interrupted{false};

void OnSignal(int) { g_interrupted.store(true); }

// Calls `stop` once SIGINT/SIGTERM arrives or the guard goes out of scope.
class StopOnSignal {
 public:
  explicit StopOnSignal(std::function<void()> stop) : stop_(std::move(stop)) {
    std::signal(SIGINT, OnSignal);
    std::signal(SIGTERM, OnSignal);
    watcher_ = std::thread([this] {
      while (!done_.load()) {
        if (g_interrupted.load()) {
          stop_();
          return;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(50));
      }
    });
  }
  ~StopOnSignal() {
    done_.store(true);
    watcher_.join();
  }

 private:
  std::function<void()> stop_;
  std::atomic<bool> done_{false};
  std::thread watcher_;
};

struct Globals {
  std::string broker;
  std::string gateway;
};

bus::Address BrokerAddress(const Globals& g) {
  return g.broker.empty() ? bus::AddressFromEnv("JUBILEO_BROKER_ADDR", bus::kDefaultBrokerPort)
                          : bus::ParseAddress(g.broker, bus::kDefaultBrokerPort);
}

bus::Address GatewayAddress(const Globals& g) {
  return g.gateway.empty() ? bus::AddressFromEnv("JUBILEO_GATEWAY_ADDR", bus::kDefaultGatewayPort)
                           : bus::ParseAddress(g.gateway, bus::kDefaultGatewayPort);
}

std::optional<std::filesystem::path> OptionalPath(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return app::ResolveDataPath(s);
}

std::set<std::string> SplitList(const std::vector<std::string>& items) {
  std::set<std::string> out;
  for (const auto& item : items) {
    std::string_view rest = item;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto part = Trim(rest.substr(0, comma));
      if (!part.empty()) out.emplace(part);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  return out;
}

int RunBroker(const Globals& g) {
  bus::BrokerServer broker(bus::BrokerOptions{BrokerAddress(g)});
  std::cerr << "broker listening on " << BrokerAddress(g).host << ":" << broker.port() << "\n";
  StopOnSignal guard([&] { broker.Stop(); });
  broker.Run();
  return 0;
}

struct SimFlags {
  std::string scene = app::kDefaultScene;
  std::string model = app::kDefaultBodyModel;
  std::uint64_t seed = 1;
  double rate = 30.0;
  double time_scale = 1.0;
  bool sync = false;
  std::uint64_t frames = 0;
};

int RunSim(const Globals& g, const SimFlags& f) {
  app::SimNodeOptions o;
  o.broker = BrokerAddress(g);
  o.body = model::LoadRobotDescription(app::ResolveDataPath(f.model));
  o.scene = sim::Scene::Load(app::ResolveDataPath(f.scene));
  o.seed = f.seed;
  o.rate_hz = f.rate;
  o.time_scale = f.time_scale;
  o.sync_behavior = f.sync;
  if (f.frames > 0) o.max_frames = f.frames;
  app::SimNode node(std::move(o));
  StopOnSignal guard([&] { node.Stop(); });
  node.Run();
  return 0;
}

int RunBehavior(const Globals& g, const std::string& model_path, const std::string& registry) {
  auto assets = app::LoadBehaviorAssets(app::ResolveDataPath(model_path), OptionalPath(registry));
  app::BehaviorNode node(app::BehaviorNodeOptions{BrokerAddress(g), {}, 2}, std::move(assets));
  StopOnSignal guard([&] { node.Stop(); });
  node.Run();
  return 0;
}

int RunRobot(const Globals& g, const std::string& model_path, const std::string& serial, double rate,
             std::uint64_t frames) {
  std::ofstream out(serial, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open serial device " + serial);
  app::RobotNodeOptions o;
  o.broker = BrokerAddress(g);
  o.model = model::LoadRobotDescription(app::ResolveDataPath(model_path));
  o.rate_hz = rate;
  if (frames > 0) o.max_frames = frames;
  app::RobotNode node(std::move(o), out);
  StopOnSignal guard([&] { node.Stop(); });
  node.Run();
  return 0;
}

int RunGateway(const Globals& g, const std::vector<std::string>& allowlist) {
  bus::GatewayOptions o;
  o.listen = GatewayAddress(g);
  o.broker = BrokerAddress(g);
  o.allowlist = allowlist.empty() ? app::DefaultGatewayAllowlist() : SplitList(allowlist);
  bus::GatewayServer gateway(std::move(o));
  std::cerr << "gateway listening on port " << gateway.port() << "\n";
  StopOnSignal guard([&] { gateway.Stop(); });
  gateway.Run();
  return 0;
}

int RunScenarioCommand(const std::string& path, bool verbose, bool realtime) {
  const auto scenario = app::LoadScenario(path);
  app::ScenarioOptions o;
  o.verbose = verbose;
  o.time_scale = realtime ? 1.0 : 0.0;
  const auto result = app::RunScenario(scenario, o);
  for (const auto& line : result.failures) std::cerr << path << ": " << line << "\n";
  std::cout << (result.passed ? "PASS " : "FAIL ") << path << " (" << FormatNumber(result.sim_time)
            << " s simulated)\n";
  return result.passed ? 0 : kExitScenario;
}

int RunRecord(const Globals& g, const std::string& out_path, const std::vector<std::string>& topics,
              double duration) {
  std::vector<std::string> list;
  if (topics.empty()) {
    list = app::DefaultRecordTopics();
  } else {
    for (const auto& t : SplitList(topics)) list.push_back(t);
  }
  app::Recorder recorder(BrokerAddress(g), out_path, list);
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(duration);
  while (!g_interrupted.load() && (duration <= 0.0 || std::chrono::steady_clock::now() < deadline)) {
    std::signal(SIGINT, OnSignal);
    std::signal(SIGTERM, OnSignal);
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  recorder.Close();
  std::cerr << "recorded " << recorder.count() << " records\n";
  return 0;
}

int RunReplay(const Globals& g, const std::string& path, double speed, double lead) {
  const auto records = app::ParseLog(ReadTextFile(path));
  std::atomic<bool> stop{false};
  StopOnSignal guard([&] { stop.store(true); });
  const auto n = app::Replay(BrokerAddress(g), records, app::ReplayOptions{speed, lead}, &stop);
  std::cerr << "replayed " << n << " envelopes\n";
  return 0;
}

int RunDemo(const Globals& g, app::DemoOptions o, bool no_gateway) {
  o.broker = BrokerAddress(g);
  if (no_gateway) {
    o.gateway.reset();
  } else {
    o.gateway = GatewayAddress(g);
  }
  app::Demo demo(std::move(o));
  std::cerr << "demo: broker " << demo.broker_address().ToString();
  if (demo.gateway_port()) std::cerr << ", gateway port " << *demo.gateway_port();
  std::cerr << "\n";
  StopOnSignal guard([&] { demo.Stop(); });
  demo.Run();
  return 0;
}

int RunEnroll(const std::string& registry_path, const std::string& name, const std::string& scene_path,
              double enrolled_at) {
  const auto path = std::filesystem::path(registry_path);
  auto registry = behavior::IdentityRegistry::Load(path);
  sim::Embedding embedding = sim::EmbeddingFromName(name);
  if (!scene_path.empty()) {
    const auto scene = sim::Scene::Load(app::ResolveDataPath(scene_path));
    bool found = false;
    for (const auto& avatar : scene.avatars) {
      if (avatar.id == name) {
        embedding = avatar.embedding;
        found = true;
      }
    }
    if (!found) throw std::runtime_error("scene has no avatar named '" + name + "'");
  }
  registry.Enroll(name, embedding, enrolled_at);
  registry.Save(path);
  std::cerr << "enrolled " << name << " (" << registry.records().size() << " identities)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Jubileo robot stack: bus broker, simulator, behavior, robot and operator tools."};
  cli.require_subcommand(1);
  Globals g;
  cli.add_option("--broker", g.broker, "Broker address host:port (env JUBILEO_BROKER_ADDR)");
  cli.add_option("--gateway", g.gateway, "Gateway address host:port (env JUBILEO_GATEWAY_ADDR)");

  std::function<int()> action;

  auto* broker = cli.add_subcommand("broker", "Run the message broker");
  broker->callback([&] { action = [&] { return RunBroker(g); }; });

  SimFlags sim_flags;
  auto* sim = cli.add_subcommand("sim", "Run the simulator node");
  sim->add_option("--scene", sim_flags.scene, "Scene file")->capture_default_str();
  sim->add_option("--model", sim_flags.model, "Body description")->capture_default_str();
  sim->add_option("--seed", sim_flags.seed, "Detector noise seed")->capture_default_str();
  sim->add_option("--rate", sim_flags.rate, "Frames per second")->capture_default_str()->check(CLI::PositiveNumber);
  sim->add_option("--time-scale", sim_flags.time_scale, "Wall seconds per simulated second, 0 = unpaced")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  sim->add_flag("--sync", sim_flags.sync, "Step in lockstep with the behavior node");
  sim->add_option("--frames", sim_flags.frames, "Stop after this many frames (0 = run forever)");
  sim->callback([&] { action = [&] { return RunSim(g, sim_flags); }; });

  std::string behavior_model = app::kDefaultBodyModel;
  std::string behavior_registry;
  auto* behavior = cli.add_subcommand("behavior", "Run the behavior node");
  behavior->add_option("--model", behavior_model, "Body description")->capture_default_str();
  behavior->add_option("--registry", behavior_registry, "Identity registry file");
  behavior->callback([&] { action = [&] { return RunBehavior(g, behavior_model, behavior_registry); }; });

  std::string robot_model = app::kDefaultFaceModel;
  std::string serial;
  double robot_rate = 30.0;
  std::uint64_t robot_frames = 0;
  auto* robot = cli.add_subcommand("robot", "Drive the physical face over a serial stream");
  robot->add_option("--model", robot_model, "Face description")->capture_default_str();
  robot->add_option("--serial", serial, "Serial device, pseudo-terminal or file")->required();
  robot->add_option("--rate", robot_rate, "Frames per second")->capture_default_str()->check(CLI::PositiveNumber);
  robot->add_option("--frames", robot_frames, "Stop after this many frames (0 = run forever)");
  robot->callback([&] { action = [&] { return RunRobot(g, robot_model, serial, robot_rate, robot_frames); }; });

  std::vector<std::string> allowlist;
  auto* gateway = cli.add_subcommand("gateway", "Bridge the bus to browser WebSocket clients");
  gateway->add_option("--allowlist", allowlist, "Comma-separated topics (default: console topics)");
  gateway->callback([&] { action = [&] { return RunGateway(g, allowlist); }; });

  std::string scenario_path;
  bool scenario_verbose = false;
  bool scenario_realtime = false;
  auto* scenario = cli.add_subcommand("scenario", "Run a scripted scenario against an in-process stack");
  scenario->add_option("script", scenario_path, "Scenario file (.scn)")->required();
  scenario->add_flag("-v,--verbose", scenario_verbose, "Log each step");
  scenario->add_flag("--realtime", scenario_realtime, "Pace the simulation in wall time");
  scenario->callback(
      [&] { action = [&] { return RunScenarioCommand(scenario_path, scenario_verbose, scenario_realtime); }; });

  std::string record_out;
  std::vector<std::string> record_topics;
  double record_duration = 0.0;
  auto* record = cli.add_subcommand("record", "Record bus traffic as JSON lines");
  record->add_option("--out", record_out, "Output log file")->required();
  record->add_option("--topics", record_topics, "Comma-separated topics (default: all)");
  record->add_option("--duration", record_duration, "Seconds to record (0 = until interrupted)");
  record->callback([&] { action = [&] { return RunRecord(g, record_out, record_topics, record_duration); }; });

  std::string replay_path;
  double replay_speed = 1.0;
  double replay_lead = 0.0;
  auto* replay = cli.add_subcommand("replay", "Re-publish the inbound records of a log");
  replay->add_option("log", replay_path, "Log file")->required();
  replay->add_option("--speed", replay_speed, "Playback speed, 0 = as fast as possible")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  replay->add_option("--lead", replay_lead, "Publish this many seconds early")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  replay->callback([&] { action = [&] { return RunReplay(g, replay_path, replay_speed, replay_lead); }; });

  app::DemoOptions demo_options;
  std::string demo_scene = app::kDefaultScene;
  std::string demo_registry;
  std::uint64_t demo_frames = 0;
  bool demo_no_gateway = false;
  auto* demo = cli.add_subcommand("demo", "Run broker, sim, behavior and gateway together");
  demo->add_option("--scene", demo_scene, "Scene file")->capture_default_str();
  demo->add_option("--registry", demo_registry, "Identity registry file");
  demo->add_option("--seed", demo_options.seed, "Detector noise seed")->capture_default_str();
  demo->add_option("--time-scale", demo_options.time_scale, "Wall seconds per simulated second, 0 = unpaced")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  demo->add_option("--frames", demo_frames, "Stop after this many frames (0 = run forever)");
  demo->add_flag("--no-gateway", demo_no_gateway, "Do not start the WebSocket gateway");
  demo->callback([&] {
    action = [&] {
      demo_options.scene = demo_scene;
      if (!demo_registry.empty()) demo_options.registry = demo_registry;
      if (demo_frames > 0) demo_options.max_frames = demo_frames;
      return RunDemo(g, demo_options, demo_no_gateway);
    };
  });

  std::string enroll_registry;
  std::string enroll_name;
  std::string enroll_scene;
  double enroll_time = 0.0;
  auto* enroll = cli.add_subcommand("enroll", "Add or replace an identity in a registry file");
  enroll->add_option("--registry", enroll_registry, "Registry file (created if missing)")->required();
  enroll->add_option("--name", enroll_name, "Identity name")->required();
  enroll->add_option("--scene", enroll_scene, "Take the embedding from this scene's avatar of the same name");
  enroll->add_option("--time", enroll_time, "Enrollment timestamp")->capture_default_str();
  enroll->callback(
      [&] { action = [&] { return RunEnroll(enroll_registry, enroll_name, enroll_scene, enroll_time); }; });

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "jubileo: " << e.what() << "\n";
    return kExitRuntime;
  }
}
