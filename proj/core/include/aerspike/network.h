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

#ifndef AERSPIKE_NETWORK_H_
#define AERSPIKE_NETWORK_H_

#include <cstdint>
#include <span>
#include <vector>

#include "aerspike/layer.h"
#include "aerspike/ztime.h"

namespace aerspike {

// Layer description without input geometry; Network::Build chains them.
struct LayerDef {
  LayerKind kind = LayerKind::kDense;
  int out_channels = 1;
  int kernel = 1;
  int stride = 1;
};

struct InputShape {
  int channels = 1;
  int height = 1;
  int width = 1;
  friend bool operator==(const InputShape&, const InputShape&) = default;
};

struct Layer {
  LayerSpec spec;
  std::vector<double> weights;
};

struct ForwardResult {
  std::vector<LayerCache> caches;

  // z per class.
  const ZMap& output() const { return caches.back().output; }
  // Smallest causal-set boundary distance over the whole network.
  double boundary_margin() const;
};

// Per-layer weight gradients, same layout as Layer::weights.
using Gradients = std::vector<std::vector<double>>;

class Network {
 public:
  Network() = default;
  // Validates every spec and that each layer's input matches the previous
  // layer's output. Weights start at zero.
  explicit Network(std::vector<LayerSpec> specs);

  static Network Build(InputShape input, std::span<const LayerDef> defs);

  size_t layer_count() const { return layers_.size(); }
  const Layer& layer(size_t i) const { return layers_[i]; }
  Layer& layer(size_t i) { return layers_[i]; }
  std::span<const Layer> layers() const { return layers_; }
  InputShape input_shape() const;
  int class_count() const;
  size_t parameter_count() const;

  // Throws GeometryMismatch if `input` does not fit the first layer and
  // NonFiniteWeight if any weight is not finite.
  ForwardResult Forward(const ZMap& input) const;

  // dL/dw for every layer given dL/dz of the class outputs.
  Gradients Backward(const ForwardResult& forward,
                     std::span<const double> output_grad) const;

  Gradients ZeroGradients() const;

  // Gaussian weights with mean weight_sum / fan_in and standard deviation
  // spread / sqrt(fan_in), so each neuron's expected sum of incoming
  // weights is weight_sum. `weight_sums` holds one value per layer, or a
  // single value used for all layers.
  void InitWeights(uint64_t seed, std::span<const double> weight_sums,
                   double spread = 1.0);
  void InitWeights(uint64_t seed) {
    const double kDefault[] = {1.5};
    InitWeights(seed, kDefault);
  }

 private:
  std::vector<Layer> layers_;
};

struct PenaltyResult {
  double value = 0.0;
  Gradients grad;
};

// sum over neurons of K * max(0, 1 - sum_i w_i), with subgradient -K on each
// incoming weight where the hinge is active (0 at the kink). A conv filter
// counts once, not once per output position.
PenaltyResult WeightSumPenalty(const Network& net, double k);

// Index of the smallest z, or -1 when no class spikes (abstain).
int PredictClass(const ZMap& class_z);

}  // namespace aerspike

#endif  // AERSPIKE_NETWORK_H_
