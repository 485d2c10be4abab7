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

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "jubileo/app/assets.hpp"
#include "jubileo/app/demo.hpp"
#include "jubileo/behavior/gaze.hpp"
#include "jubileo/bus/envelope.hpp"
#include "jubileo/grammar/command.hpp"
#include "jubileo/model/urdf.hpp"
#include "jubileo/sim/camera.hpp"
#include "jubileo/sim/detect.hpp"
#include "jubileo/sim/world.hpp"

namespace {

using namespace jubileo;

const model::RobotModel& Body() {
  static const auto body = model::LoadRobotDescription(app::ResolveDataPath(app::kDefaultBodyModel));
  return body;
}

void BM_EnvelopeRoundTrip(benchmark::State& state) {
  const std::vector<std::uint8_t> payload(static_cast<std::size_t>(state.range(0)), 0x5a);
  const bus::TopicName topic("/face/pose_state");
  for (auto _ : state) {
    const auto frame = bus::EncodeEnvelope(bus::MessageKind::kPublish, topic, payload);
    benchmark::DoNotOptimize(bus::DecodeEnvelope(frame));
  }
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EnvelopeRoundTrip)->Range(16, 64 << 10);

void BM_ParseCommand(benchmark::State& state) {
  const char* inputs[] = {"look at me", "Look at the red ball", "say \"good morning everyone\"", "grab the blue cup",
                          "jump around"};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(grammar::ParseCommand(inputs[i++ % 5]));
}
BENCHMARK(BM_ParseCommand);

void BM_GazeUpdate(benchmark::State& state) {
  const sim::CameraModel camera;
  const auto limits = behavior::GazeLimitsFromModel(Body());
  sim::GazeState gaze{0.1, -0.05, 0.02, 0.01};
  for (auto _ : state) {
    gaze = behavior::GazeUpdate(380.0, 200.0, gaze, {}, camera, 1.0 / 30.0, limits);
    benchmark::DoNotOptimize(gaze);
  }
}
BENCHMARK(BM_GazeUpdate);

void BM_WorldStepAndDetect(benchmark::State& state) {
  const auto scene = sim::Scene::Load(app::ResolveDataPath(app::kDefaultScene));
  sim::World world(Body(), scene);
  const sim::CameraModel camera;
  for (auto _ : state) {
    world.Step(1.0 / 30.0);
    benchmark::DoNotOptimize(sim::Detect(world, camera, {}, 7));
  }
}
BENCHMARK(BM_WorldStepAndDetect);

}  // namespace

BENCHMARK_MAIN();
