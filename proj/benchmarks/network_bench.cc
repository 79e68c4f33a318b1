// Copyright 2026 The aerspike Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "aerspike/layer.h"
#include "aerspike/loss.h"
#include "aerspike/network.h"
#include "aerspike/random.h"
#include "aerspike/ztime.h"

namespace aerspike {
namespace {

// About a tenth of the 34x34 pixels spike, as in the encoded recordings.
ZMap SparseInput(uint64_t seed) {
  Rng rng(seed);
  ZMap z(1, 34, 34);
  for (double& v : z.values()) {
    if (rng.Bernoulli(0.1)) v = ToZ(rng.Uniform());
  }
  return z;
}

Network ReferenceNetwork(int conv1, int conv2) {
  const LayerDef defs[] = {{LayerKind::kConv, conv1, 5, 2},
                           {LayerKind::kConv, conv2, 5, 2},
                           {LayerKind::kDense, 10, 1, 1}};
  Network net = Network::Build({1, 34, 34}, defs);
  const double sums[] = {20.0, 8.0, 6.0};
  net.InitWeights(3, sums, 1.0);
  return net;
}

void BM_Forward(benchmark::State& state) {
  const Network net = ReferenceNetwork(static_cast<int>(state.range(0)),
                                       static_cast<int>(state.range(1)));
  const ZMap input = SparseInput(5);
  for (auto _ : state) benchmark::DoNotOptimize(net.Forward(input));
}
BENCHMARK(BM_Forward)->Args({8, 8})->Args({32, 16});

void BM_ForwardBackward(benchmark::State& state) {
  const Network net = ReferenceNetwork(static_cast<int>(state.range(0)),
                                       static_cast<int>(state.range(1)));
  const ZMap input = SparseInput(5);
  for (auto _ : state) {
    const ForwardResult f = net.Forward(input);
    std::vector<double> dz(net.class_count(), 0.0);
    if (Spikes(f.output()[0])) dz = LossGrad(f.output().values(), 0);
    benchmark::DoNotOptimize(net.Backward(f, dz));
  }
}
BENCHMARK(BM_ForwardBackward)->Args({8, 8})->Args({32, 16});

void BM_ConvLayerForward(benchmark::State& state) {
  const int channels = static_cast<int>(state.range(0));
  const LayerSpec spec{LayerKind::kConv, 1, 34, 34, channels, 5, 2};
  Rng rng(9);
  std::vector<double> w(spec.weight_count());
  for (double& v : w) v = rng.Uniform(0.0, 2.0);
  const ZMap input = SparseInput(6);
  for (auto _ : state) benchmark::DoNotOptimize(LayerForward(spec, w, input));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spec.output_size()));
}
BENCHMARK(BM_ConvLayerForward)->RangeMultiplier(2)->Range(4, 32);

}  // namespace
}  // namespace aerspike
