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

#include "aerspike/layer.h"

#include <algorithm>

#include "aerspike/error.h"

namespace aerspike {
namespace {

bool AfferentLess(const Afferent& a, const Afferent& b) {
  return a.z < b.z || (a.z == b.z && a.input_index < b.input_index);
}

void AppendNeuron(std::span<const Afferent> sorted,
                  std::span<const double> weights, size_t neuron,
                  LayerCache& cache) {
  double z_out = kNoSpike;
  double sum = 0.0;
  const size_t prefix = ScanCausalPrefix(sorted, weights, &z_out, &sum,
                                         &cache.boundary_margin);
  cache.output[neuron] = z_out;
  cache.weight_sum[neuron] = sum;
  for (size_t k = 0; k < prefix; ++k) {
    cache.causal_inputs.push_back(sorted[k].input_index);
    cache.causal_weights.push_back(sorted[k].weight_index);
  }
  cache.causal_offsets[neuron + 1] =
      static_cast<uint32_t>(cache.causal_inputs.size());
}

}  // namespace

std::string LayerKindName(LayerKind kind) {
  return kind == LayerKind::kConv ? "conv" : "dense";
}

int LayerSpec::out_height() const {
  if (kind == LayerKind::kDense) return 1;
  return stride > 0 ? (in_height - kernel) / stride + 1 : 0;
}

int LayerSpec::out_width() const {
  if (kind == LayerKind::kDense) return 1;
  return stride > 0 ? (in_width - kernel) / stride + 1 : 0;
}

size_t LayerSpec::fan_in() const {
  if (kind == LayerKind::kDense) return input_size();
  return static_cast<size_t>(in_channels) * kernel * kernel;
}

void LayerSpec::Validate() const {
  Require(in_channels > 0 && in_height > 0 && in_width > 0,
          ErrorCode::kConfigError, "layer input dimensions must be positive");
  Require(out_channels > 0, ErrorCode::kConfigError,
          "layer output channels must be positive");
  if (kind == LayerKind::kConv) {
    Require(kernel > 0 && stride > 0, ErrorCode::kConfigError,
            "conv kernel and stride must be positive");
    Require(kernel <= in_height && kernel <= in_width, ErrorCode::kConfigError,
            "conv kernel " + std::to_string(kernel) + " larger than input " +
                std::to_string(in_height) + "x" + std::to_string(in_width));
    Require(out_height() > 0 && out_width() > 0, ErrorCode::kConfigError,
            "conv output geometry is not positive");
  }
}

LayerCache LayerForward(const LayerSpec& spec, std::span<const double> weights,
                        const ZMap& input) {
  Require(input.channels() == spec.in_channels &&
              input.height() == spec.in_height &&
              input.width() == spec.in_width,
          ErrorCode::kGeometryMismatch,
          "layer input map does not match its spec");
  Require(weights.size() == spec.weight_count(), ErrorCode::kShapeMismatch,
          "weight count does not match layer spec");

  LayerCache cache;
  cache.input = input;
  cache.output = ZMap(spec.out_channels, spec.out_height(), spec.out_width());
  const size_t n_out = spec.output_size();
  cache.weight_sum.assign(n_out, 0.0);
  cache.causal_offsets.assign(n_out + 1, 0);

  std::vector<Afferent> afferents;
  if (spec.kind == LayerKind::kDense) {
    // Every neuron sees the same inputs, so one sort serves all of them;
    // only the weight offset changes.
    for (size_t i = 0; i < input.size(); ++i) {
      if (Spikes(input[i])) {
        afferents.push_back({input[i], static_cast<uint32_t>(i),
                             static_cast<uint32_t>(i)});
      }
    }
    std::sort(afferents.begin(), afferents.end(), AfferentLess);
    const size_t fan_in = spec.fan_in();
    for (size_t o = 0; o < n_out; ++o) {
      if (o > 0) {
        for (Afferent& a : afferents) a.weight_index += fan_in;
      }
      AppendNeuron(afferents, weights, o, cache);
    }
    return cache;
  }

  const int k = spec.kernel;
  const int oh = spec.out_height();
  const int ow = spec.out_width();
  afferents.reserve(spec.fan_in());
  for (int oc = 0; oc < spec.out_channels; ++oc) {
    const size_t filter = static_cast<size_t>(oc) * spec.fan_in();
    for (int oy = 0; oy < oh; ++oy) {
      for (int ox = 0; ox < ow; ++ox) {
        afferents.clear();
        for (int ic = 0; ic < spec.in_channels; ++ic) {
          for (int ky = 0; ky < k; ++ky) {
            const int iy = oy * spec.stride + ky;
            for (int kx = 0; kx < k; ++kx) {
              const int ix = ox * spec.stride + kx;
              const double z = input.at(ic, iy, ix);
              if (!Spikes(z)) continue;
              const size_t in_idx =
                  (static_cast<size_t>(ic) * spec.in_height + iy) *
                      spec.in_width + ix;
              const size_t w_idx =
                  filter + (static_cast<size_t>(ic) * k + ky) * k + kx;
              afferents.push_back({z, static_cast<uint32_t>(in_idx),
                                   static_cast<uint32_t>(w_idx)});
            }
          }
        }
        std::sort(afferents.begin(), afferents.end(), AfferentLess);
        const size_t neuron =
            (static_cast<size_t>(oc) * oh + oy) * ow + ox;
        AppendNeuron(afferents, weights, neuron, cache);
      }
    }
  }
  return cache;
}

void LayerBackward(const LayerSpec& spec, std::span<const double> weights,
                   const LayerCache& cache, std::span<const double> output_grad,
                   std::span<double> weight_grad, std::span<double> input_grad) {
  const size_t n_out = spec.output_size();
  Require(cache.output.size() == n_out && cache.input.size() == spec.input_size() &&
              cache.causal_offsets.size() == n_out + 1,
          ErrorCode::kStaleCache, "cache does not match layer spec");
  Require(output_grad.size() == n_out && weight_grad.size() == spec.weight_count() &&
              input_grad.size() == spec.input_size() &&
              weights.size() == spec.weight_count(),
          ErrorCode::kStaleCache, "gradient buffers do not match layer spec");

  std::fill(input_grad.begin(), input_grad.end(), 0.0);
  for (size_t n = 0; n < n_out; ++n) {
    const double g = output_grad[n];
    const double z_out = cache.output[n];
    if (g == 0.0 || !Spikes(z_out)) continue;
    const double scale = g / (cache.weight_sum[n] - 1.0);
    for (uint32_t c = cache.causal_offsets[n]; c < cache.causal_offsets[n + 1];
         ++c) {
      const uint32_t in_idx = cache.causal_inputs[c];
      const uint32_t w_idx = cache.causal_weights[c];
      weight_grad[w_idx] += scale * (cache.input[in_idx] - z_out);
      input_grad[in_idx] += scale * weights[w_idx];
    }
  }
}

}  // namespace aerspike
