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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "jubileo/app/assets.hpp"
#include "jubileo/app/demo.hpp"
#include "jubileo/app/record.hpp"
#include "jubileo/app/scenario.hpp"
#include "jubileo/app/sim_node.hpp"
#include "jubileo/behavior/identity.hpp"
#include "jubileo/bus/client.hpp"
#include "jubileo/bus/envelope.hpp"
#include "jubileo/bus/topic.hpp"
#include "jubileo/grammar/command.hpp"
#include "jubileo/model/calibration.hpp"
#include "jubileo/model/servo_frame.hpp"
#include "jubileo/model/urdf.hpp"
#include "jubileo/motion/expression.hpp"
#include "jubileo/motion/planner.hpp"
#include "jubileo/msg/messages.hpp"
#include "support/broker.hpp"
#include "support/closed_loop.hpp"
#include "support/fsm_table.hpp"
#include "support/gen.hpp"
#include "support/grammar_gen.hpp"

namespace {

using namespace jubileo;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

double Seconds(Clock::time_point since) { return std::chrono::duration<double>(Clock::now() - since).count(); }

const model::RobotModel& Body() {
  static const auto body = model::LoadRobotDescription(app::ResolveDataPath(app::kDefaultBodyModel));
  return body;
}

const model::RobotModel& Face() {
  static const auto face = model::LoadRobotDescription(app::ResolveDataPath(app::kDefaultFaceModel));
  return face;
}

std::string Raw(const std::vector<std::uint8_t>& b) { return {b.begin(), b.end()}; }

Verdict WireProtocol() {
  Verdict v;
  testing::Gen gen(1001);
  const std::vector<bus::MessageKind> kinds = {bus::MessageKind::kPublish, bus::MessageKind::kSubscribe,
                                               bus::MessageKind::kUnsubscribe, bus::MessageKind::kPing,
                                               bus::MessageKind::kPong, bus::MessageKind::kError};
  for (int i = 0; i < 10000 && v.pass; ++i) {
    const bus::Envelope e{gen.Pick(kinds), bus::TopicName(gen.Topic()), gen.Bytes(gen.Coin(0.05) ? 65536 : 256)};
    const auto frame = bus::EncodeEnvelope(e);
    const auto d = bus::DecodeEnvelope(frame);
    v.Require(d.envelope == e && d.consumed == frame.size(), "round trip mismatch at case " + std::to_string(i));
  }
  std::uint64_t flips = 0;
  for (int i = 0; i < 500 && v.pass; ++i) {
    std::string topic = gen.Topic();
    if (topic.size() > 20) topic.resize(20);
    if (topic.back() == '/') topic.pop_back();
    const auto frame = bus::EncodeEnvelope(gen.Pick(kinds), bus::TopicName(topic), gen.Bytes(64 - 14 - topic.size()));
    if (frame.size() > 64) {
      v.Require(false, "frame over 64 bytes");
      break;
    }
    for (std::size_t bit = 0; bit < frame.size() * 8; ++bit) {
      auto copy = frame;
      copy[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
      ++flips;
      try {
        bus::DecodeEnvelope(copy);
        v.Require(false, "undetected flip of bit " + std::to_string(bit));
      } catch (const bus::FrameError&) {
      }
    }
  }
  if (v.pass) v.detail = "10000 round trips, " + std::to_string(flips) + " flips detected";
  return v;
}

Verdict BrokerOrdering() {
  Verdict v;
  constexpr int kMessages = 1000;
  testing::TestBroker broker;
  std::vector<std::unique_ptr<bus::BusClient>> subscribers;
  std::mutex mu;
  std::vector<std::map<char, std::vector<int>>> got(3);
  for (int i = 0; i < 3; ++i) {
    subscribers.push_back(std::make_unique<bus::BusClient>(broker.address()));
    subscribers.back()->Subscribe("/load", [&, i](const bus::Envelope& e) {
      const auto text = e.payload_view();
      std::lock_guard lock(mu);
      got[i][text[0]].push_back(std::stoi(std::string(text.substr(1))));
    });
    v.Require(subscribers.back()->Sync(), "subscriber sync timed out");
  }
  bus::BusClient a(broker.address());
  bus::BusClient b(broker.address());
  std::thread ta([&] {
    for (int i = 0; i < kMessages; ++i) a.Publish("/load", "a" + std::to_string(i));
    a.Sync();
  });
  std::thread tb([&] {
    for (int i = 0; i < kMessages; ++i) b.Publish("/load", "b" + std::to_string(i));
    b.Sync();
  });
  ta.join();
  tb.join();
  for (auto& s : subscribers) v.Require(s->Sync(), "subscriber sync timed out");
  std::vector<int> expected(kMessages);
  for (int i = 0; i < kMessages; ++i) expected[i] = i;
  std::lock_guard lock(mu);
  for (int i = 0; i < 3; ++i) {
    v.Require(got[i]['a'] == expected && got[i]['b'] == expected,
              "subscriber " + std::to_string(i) + " lost or reordered messages");
  }
  if (v.pass) v.detail = "6000 deliveries in order";
  return v;
}

Verdict ModelAndCalibration() {
  Verdict v;
  const auto channels = Face().ChannelJoints();
  v.Require(channels.size() == 12, "face has " + std::to_string(channels.size()) + " channel joints");
  for (const auto* j : channels) {
    const int lo = j->direction > 0 ? j->pulse_min : j->pulse_max;
    const int hi = j->direction > 0 ? j->pulse_max : j->pulse_min;
    v.Require(model::AngleToPulse(*j, j->min_angle) == lo, j->name + " lower endpoint");
    v.Require(model::AngleToPulse(*j, j->max_angle) == hi, j->name + " upper endpoint");
    v.Require(model::AngleToPulse(*j, j->min_angle - 1.0) == lo, j->name + " lower clamp");
    v.Require(model::AngleToPulse(*j, j->max_angle + 1.0) == hi, j->name + " upper clamp");
    const double mid = 0.5 * (j->min_angle + j->max_angle);
    const int want_mid = static_cast<int>(std::lround(0.5 * (j->pulse_min + j->pulse_max)));
    v.Require(std::abs(model::AngleToPulse(*j, mid) - want_mid) <= ((j->pulse_min + j->pulse_max) % 2),
              j->name + " midpoint");
  }
  model::JointDescriptor t;
  t.name = "t";
  t.min_angle = -0.5;
  t.max_angle = 0.5;
  t.servo_channel = 0;
  t.pulse_min = 1000;
  t.pulse_max = 2000;
  v.Require(model::AngleToPulse(t, 0.0) == 1500 && model::AngleToPulse(t, 0.25) == 1750 &&
                model::AngleToPulse(t, 0.7) == 2000 && model::AngleToPulse(t, -9.0) == 1000,
            "hand-computed pulses");

  testing::Gen gen(1003);
  int rejected = 0;
  for (int i = 0; i < 10000 && v.pass; ++i) {
    std::vector<model::ServoCommand> entries(gen.Index(17));
    for (auto& e : entries) {
      e.channel = static_cast<std::uint8_t>(gen.Int(0, 255));
      e.pulse_us = static_cast<std::uint16_t>(gen.Int(500, 2500));
    }
    auto bytes = model::EncodeServoFrame(entries);
    v.Require(model::DecodeServoFrame(bytes) == entries, "servo round trip " + std::to_string(i));
    bytes.back() ^= static_cast<std::uint8_t>(gen.Int(1, 255));
    try {
      model::DecodeServoFrame(bytes);
      v.Require(false, "bad checksum accepted at case " + std::to_string(i));
    } catch (const model::ServoFrameError&) {
      ++rejected;
    }
  }
  if (v.pass) v.detail = "12 servos, 10000 frames, " + std::to_string(rejected) + " corrupt checksums rejected";
  return v;
}

Verdict ExpressionSuite() {
  Verdict v;
  const auto lib = motion::ExpressionLibrary::Load(app::ResolveDataPath("config/expressions.tbl"), Face());
  double closest = 1e9;
  for (auto a : motion::kAllExpressions) {
    for (auto b : motion::kAllExpressions) {
      if (a == b) continue;
      double d = 0.0;
      for (const auto& [name, x] : lib.Pose(a).angles) d = std::max(d, std::abs(x - *lib.Pose(b).get(name)));
      closest = std::min(closest, d);
    }
  }
  v.Require(closest >= 0.1, "closest expressions differ by " + std::to_string(closest));

  const auto limits = motion::RateLimitsFromModel(Face());
  testing::Gen gen(1004);
  double worst = -1e300;
  for (int i = 0; i < 1000 && v.pass; ++i) {
    model::FacePose a;
    model::FacePose b;
    for (const auto* j : Face().ChannelJoints()) {
      a.angles[j->name] = gen.Real(j->min_angle, j->max_angle);
      b.angles[j->name] = gen.Real(j->min_angle, j->max_angle);
    }
    const auto plan = motion::PlanTransition(a, b, gen.Real(0.05, 2.0), limits);
    const auto& t = plan.trajectory;
    v.Require(t.Sample(0.0) == a && t.Sample(t.duration()) == b, "endpoint mismatch at case " + std::to_string(i));
    const auto& keys = t.keyframes();
    for (std::size_t k = 1; k < keys.size(); ++k) {
      const double dt = keys[k].time - keys[k - 1].time;
      for (const auto& [name, x] : keys[k].pose.angles) {
        worst = std::max(worst, std::abs(x - *keys[k - 1].pose.get(name)) / dt - limits.For(name));
      }
    }
  }
  v.Require(worst <= 1e-9, "rate limit exceeded by " + std::to_string(worst));
  if (v.pass) {
    std::ostringstream d;
    d << "8 expressions, min distance " << closest << " rad, worst rate excess " << worst;
    v.detail = d.str();
  }
  return v;
}

Verdict GazeConvergence() {
  Verdict v;
  testing::Gen gen(1005);
  int worst_ticks = 0;
  double worst_eye = 0.0;
  for (int i = 0; i < 50 && v.pass; ++i) {
    const auto placement = testing::RandomPlacement(gen);
    const auto trace = testing::RunGazeLoop(Body(), placement, 300, sim::DetectorNoise{}, 5000 + i);
    v.Require(trace.ticks_to_deadband >= 0 && trace.ticks_to_deadband < 100,
              "placement " + std::to_string(i) + " not within the deadband after 100 ticks");
    worst_ticks = std::max(worst_ticks, trace.ticks_to_deadband);
    const auto& last = trace.gaze.back();
    const double eye = std::max(std::abs(last.eye_yaw), std::abs(last.eye_pitch));
    worst_eye = std::max(worst_eye, eye);
    v.Require(eye < 0.05, "placement " + std::to_string(i) + " eyes at " + std::to_string(eye) + " rad after 10 s");
  }
  if (v.pass) {
    std::ostringstream d;
    d << "50 placements, slowest " << worst_ticks << " ticks, largest eye angle after 10 s " << worst_eye << " rad";
    v.detail = d.str();
  }
  return v;
}

Verdict Grammar(const std::filesystem::path& data) {
  Verdict v;
  std::ifstream in(data / "grammar_corpus.tsv");
  v.Require(static_cast<bool>(in), "grammar corpus missing");
  int cases = 0;
  bool look_at_me = false;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.rfind('\t');
    const std::string input = line.substr(0, tab);
    const std::string want = line.substr(tab + 1);
    const auto r = grammar::ParseCommand(input);
    const std::string got = std::holds_alternative<grammar::ParseError>(r)
                                ? "error:" + std::string(grammar::ErrcName(std::get<grammar::ParseError>(r).code))
                                : grammar::Describe(std::get<grammar::CommandAst>(r));
    v.Require(got == want, "corpus '" + input + "' gave " + got);
    look_at_me = look_at_me || input == "Look at me";
    ++cases;
  }
  v.Require(cases >= 30, "only " + std::to_string(cases) + " corpus cases");
  v.Require(look_at_me, "corpus lacks 'Look at me'");

  testing::Gen gen(1006);
  const std::vector<std::string> vocab = {"look", "at", "me", "the", "red", "blue", "show", "say", "\"", "joy",
                                          "grab", "stop", "mimic", "!", ",", "\"hi\"", "ball", "\xC3\xA9", "\xFF"};
  int errors = 0;
  for (int i = 0; i < 100000 && v.pass; ++i) {
    std::string input;
    switch (gen.Int(0, 2)) {
      case 0:
        input = grammar::Render(testing::RandomAst(gen));
        if (!input.empty()) input[gen.Index(input.size())] = static_cast<char>(gen.Int(1, 255));
        break;
      case 1:
        for (int k = gen.Int(0, 8); k > 0; --k) input += gen.Pick(vocab) + (gen.Coin(0.8) ? " " : "");
        break;
      default:
        input = Raw(gen.Bytes(256));
    }
    try {
      const auto r = grammar::ParseCommand(input);
      if (const auto* e = std::get_if<grammar::ParseError>(&r)) {
        ++errors;
        v.Require(!e->message.empty(), "error without a message");
      }
    } catch (const std::exception& e) {
      v.Require(false, std::string("uncategorized failure: ") + e.what());
    }
  }
  if (v.pass) v.detail = std::to_string(cases) + " corpus cases, 100000 fuzz inputs (" + std::to_string(errors) +
                         " categorized errors)";
  return v;
}

Verdict Identity() {
  Verdict v;
  testing::Gen gen(1007);
  const auto unit = [&] {
    sim::Embedding e;
    for (auto& x : e) x = gen.Normal(1.0);
    return sim::Normalized(e);
  };
  behavior::IdentityRegistry reg;
  std::vector<sim::Embedding> enrolled;
  for (int i = 0; i < 5; ++i) {
    enrolled.push_back(unit());
    reg.Enroll("person" + std::to_string(i), enrolled.back(), 1.7e9 + i);
  }
  std::vector<std::pair<std::size_t, sim::Embedding>> probes;
  for (int p = 0; p < 1000; ++p) {
    const std::size_t who = gen.Index(5);
    sim::Embedding e = enrolled[who];
    for (auto& x : e) x += gen.Normal(0.05);
    probes.emplace_back(who, sim::Normalized(e));
  }
  // Brute-force oracle: best cosine over the raw vectors, same threshold.
  int oracle = 0;
  int correct = 0;
  for (const auto& [who, probe] : probes) {
    std::size_t best = 0;
    double best_score = -2.0;
    for (std::size_t i = 0; i < enrolled.size(); ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < probe.size(); ++k) s += probe[k] * enrolled[i][k];
      if (s > best_score) {
        best_score = s;
        best = i;
      }
    }
    oracle += best == who && best_score >= behavior::kDefaultIdentityThreshold;
    const auto m = reg.Identify(probe);
    correct += m && m->name == "person" + std::to_string(who);
  }
  v.Require(correct >= oracle, "registry " + std::to_string(correct) + " below oracle " + std::to_string(oracle));
  v.Require(correct >= 990, "identification rate " + std::to_string(correct) + "/1000");

  const auto path = std::filesystem::temp_directory_path() / ("jubileo_accept_" + std::to_string(gen.Bits()) + ".reg");
  reg.Save(path);
  const auto loaded = behavior::IdentityRegistry::Load(path);
  std::filesystem::remove(path);
  v.Require(loaded == reg, "persisted registry differs after load");
  for (const auto& [who, probe] : probes) {
    if (loaded.Identify(probe) != reg.Identify(probe)) {
      v.Require(false, "identify changed after load");
      break;
    }
  }
  if (v.pass) {
    v.detail = std::to_string(correct) + "/1000 correct (oracle " + std::to_string(oracle) +
               "), persist/load identical";
  }
  return v;
}

Verdict FsmTable(const std::filesystem::path& data) {
  Verdict v;
  const auto rows = behavior::golden::Table();
  const auto frozen = behavior::golden::ReadGolden(data);
  v.Require(frozen.size() == rows.size(), "table has " + std::to_string(rows.size()) + " rows, frozen " +
                                              std::to_string(frozen.size()));
  for (std::size_t i = 0; i < std::min(rows.size(), frozen.size()); ++i) {
    v.Require(rows[i] == frozen[i], "row differs: " + rows[i]);
  }
  std::set<behavior::Mode> modes;
  for (const auto& s : behavior::golden::States()) {
    modes.insert(s.state.current.mode);
    const auto out = behavior::golden::Machine().Step(s.state, behavior::CommandEvent{grammar::Stop{}, 5.0},
                                                      behavior::golden::Measured());
    bool neutral = false;
    for (const auto& a : out.actions) neutral = neutral || std::holds_alternative<behavior::Neutral>(a);
    v.Require(out.state.current.mode == behavior::Mode::kIdle && neutral, "Stop from " + s.name);
  }
  v.Require(modes.size() == 6, "fixtures cover " + std::to_string(modes.size()) + " modes");
  if (v.pass) v.detail = std::to_string(rows.size()) + " transitions match; Stop reaches Idle from all 6 modes";
  return v;
}

int RunCli(const std::string& cli, const std::string& args) {
  const std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Verdict Scenarios(const std::string& cli) {
  Verdict v;
  const std::vector<std::string> names = {"face_tracking", "color_tracking", "mimic", "grab", "greeting"};
  for (const auto& n : names) {
    const auto path = app::ResolveDataPath("scenarios/" + n + ".scn");
    if (!cli.empty()) {
      const int rc = RunCli(cli, "scenario \"" + path.string() + "\"");
      v.Require(rc == 0, n + ".scn exited " + std::to_string(rc));
    }
    if (n == "grab") {
      const auto r = app::RunScenario(app::LoadScenario(path));
      v.Require(r.passed, "grab.scn failed in process");
      v.Require(r.final_world.grabbed == std::optional<std::string>("red_ball"), "red_ball not grabbed at the end");
      for (const auto& o : r.final_world.objects) {
        if (o.id != "red_ball") continue;
        for (int k = 0; k < 3; ++k) {
          v.Require(std::abs(o.position[k] - r.final_world.end_effector[k]) < 1e-9, "red_ball not at the hand");
        }
      }
    }
  }
  if (v.pass) v.detail = cli.empty() ? "in process only (no CLI path)" : "5 scenarios exit 0; red_ball held";
  return v;
}

Verdict Replay() {
  Verdict v;
  constexpr std::uint64_t kFrames = 900;  // 30 s at 30 Hz
  const auto log_path =
      std::filesystem::temp_directory_path() / ("jubileo_accept_" + std::to_string(::getpid()) + ".jsonl");

  std::uint64_t late = 0;
  {
    app::DemoOptions options;
    options.broker = {"127.0.0.1", 0};
    options.gateway.reset();
    options.registry = "registries/friends.reg";
    options.seed = 21;
    options.time_scale = 0.0;
    options.max_frames = kFrames;
    app::Demo demo(options);
    app::Recorder recorder(demo.broker_address(), log_path, app::DefaultRecordTopics());
    bus::BusClient operator_(demo.broker_address());
    const std::map<std::uint64_t, std::string> commands = {
        {15, "look at me"},          {150, "look at the red ball"}, {330, "show surprise"},
        {420, "mimic me"},           {480, "say \"hello there\""},  {540, "look at the green cube"},
        {600, "grab the red ball"},  {870, "stop"},
    };
    demo.sim().SetBeforeStep([&](const sim::World& world) {
      const auto frame = world.frame_seq();
      if (auto it = commands.find(frame); it != commands.end()) {
        operator_.Publish(bus::topics::kSpeechCommandText, it->second);
      }
      if (frame == 240) {
        sim::MoveRequest move;
        move.apply_seq = frame + 2;
        move.id = "red_ball";
        move.position = sim::Vec3{0.1, 0.2, 0.65};
        operator_.Publish(bus::topics::kWorldMoveObject, msg::Encode(move));
      }
      operator_.Sync();
    });
    demo.sim().SetAfterFrame([&](const sim::World& world) { late = world.stats().late_commands; });
    demo.Run();
    operator_.Close();
    recorder.Close();
  }
  std::ifstream in(log_path);
  std::stringstream text;
  text << in.rdbuf();
  const auto records = app::ParseLog(text.str());
  std::filesystem::remove(log_path);
  std::vector<std::string> live;
  std::size_t inbound = 0;
  for (const auto& r : records) {
    if (r.topic == bus::topics::kFacePoseState) live.push_back(r.payload);
    inbound += r.inbound;
  }
  v.Require(live.size() == kFrames + 1, "recorded " + std::to_string(live.size()) + " pose frames");
  v.Require(late == 0, std::to_string(late) + " late commands in the live run");

  std::vector<std::string> replayed;
  {
    testing::TestBroker broker;
    app::SimNodeOptions options;
    options.broker = broker.address();
    options.body = Body();
    options.scene = sim::Scene::Load(app::ResolveDataPath(app::kDefaultScene));
    options.seed = 21;
    options.time_scale = 0.0;
    options.max_frames = kFrames;
    app::SimNode sim(options);
    bus::BusClient sink(broker.address());
    std::mutex mu;
    sink.Subscribe(bus::topics::kFacePoseState, [&](const bus::Envelope& e) {
      std::lock_guard lock(mu);
      replayed.emplace_back(e.payload_view());
    });
    sink.Sync();
    app::Replay(broker.address(), records, {0.0, 0.0});
    sim.client().Sync();
    sim.Run();
    sink.Sync();
  }
  v.Require(replayed.size() == live.size(), "replay produced " + std::to_string(replayed.size()) + " frames");
  for (std::size_t i = 0; i < std::min(live.size(), replayed.size()); ++i) {
    if (live[i] != replayed[i]) {
      v.Require(false, "first difference at frame " + std::to_string(i));
      break;
    }
  }
  if (v.pass) {
    v.detail = std::to_string(live.size()) + " pose_state frames identical, " + std::to_string(inbound) +
               " inbound records replayed";
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  // argv[1]: test data directory; argv[2]: the jubileo CLI, optional.
  const std::filesystem::path data = argc > 1 ? argv[1] : JUBILEO_TEST_DATA_DIR;
  const std::string cli = argc > 2 ? argv[2] : "";

  struct Criterion {
    int id;
    std::string name;
    double budget_s;  // 0: none
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "wire protocol", 10, WireProtocol},
      {2, "broker ordering", 5, BrokerOrdering},
      {3, "model census and calibration", 0, ModelAndCalibration},
      {4, "expression suite", 0, ExpressionSuite},
      {5, "gaze convergence", 30, GazeConvergence},
      {6, "grammar", 20, [&] { return Grammar(data); }},
      {7, "identity registry", 5, Identity},
      {8, "behavior transition table", 0, [&] { return FsmTable(data); }},
      {9, "end-to-end scenarios", 60, [&] { return Scenarios(cli); }},
      {10, "record and replay", 0, Replay},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double took = Seconds(start);
    if (v.pass && c.budget_s > 0 && took >= c.budget_s) {
      v.pass = false;
      v.detail = "over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
    }
    failed += !v.pass;
    std::printf("%s criterion %d: %s (%.2f s) %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), took,
                v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
