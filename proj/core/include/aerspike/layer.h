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

#ifndef AERSPIKE_LAYER_H_
#define AERSPIKE_LAYER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aerspike/neuron.h"
#include "aerspike/ztime.h"

namespace aerspike {

enum class LayerKind { kConv, kDense };

std::string LayerKindName(LayerKind kind);

// Shape of one layer. Conv weights are laid out [out][in][ky][kx] and shared
// across output positions (no padding). Dense weights are [out][in] over the
// channel-major flattened input and the output is out_channels x 1 x 1.
struct LayerSpec {
  LayerKind kind = LayerKind::kDense;
  int in_channels = 1;
  int in_height = 1;
  int in_width = 1;
  int out_channels = 1;
  int kernel = 1;  // conv only
  int stride = 1;  // conv only

  int out_height() const;
  int out_width() const;
  size_t fan_in() const;
  size_t weight_count() const { return fan_in() * out_channels; }
  size_t input_size() const {
    return static_cast<size_t>(in_channels) * in_height * in_width;
  }
  size_t output_size() const {
    return static_cast<size_t>(out_channels) * out_height() * out_width();
  }

  // Throws ConfigError when any size is non-positive, including a conv
  // output of floor((in - k) / stride) + 1 <= 0.
  void Validate() const;

  friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

// Everything the backward pass needs from one layer's forward pass.
struct LayerCache {
  ZMap input;
  ZMap output;
  std::vector<double> weight_sum;        // per output neuron
  std::vector<uint32_t> causal_offsets;  // output_size + 1 entries
  std::vector<uint32_t> causal_inputs;   // input map index per causal spike
  std::vector<uint32_t> causal_weights;  // weight index per causal spike
  double boundary_margin = kNoSpike;     // min over all neurons

  std::span<const uint32_t> CausalInputs(size_t neuron) const {
    return std::span(causal_inputs)
        .subspan(causal_offsets[neuron],
                 causal_offsets[neuron + 1] - causal_offsets[neuron]);
  }
};

// Every output neuron fires at most once, at the closed-form first spike
// over its receptive field. Throws GeometryMismatch.
LayerCache LayerForward(const LayerSpec& spec, std::span<const double> weights,
                        const ZMap& input);

// Given dL/dz_out for every output neuron, accumulates dL/dw into
// `weight_grad` (weight_count entries) and writes dL/dz_in into `input_grad`
// (input_size entries, overwritten). For a spiking neuron with causal set
// C and S = sum_C w:
//   dz_out/dw_i = (z_i - z_out) / (S - 1),  dz_out/dz_i = w_i / (S - 1).
// Silent neurons pass no gradient. Throws StaleCache on shape mismatch.
void LayerBackward(const LayerSpec& spec, std::span<const double> weights,
                   const LayerCache& cache, std::span<const double> output_grad,
                   std::span<double> weight_grad, std::span<double> input_grad);

}  // namespace aerspike

#endif  // AERSPIKE_LAYER_H_
