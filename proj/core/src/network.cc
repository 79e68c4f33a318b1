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

#include "aerspike/network.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "aerspike/error.h"
#include "aerspike/random.h"

namespace aerspike {

double ForwardResult::boundary_margin() const {
  double m = kNoSpike;
  for (const LayerCache& c : caches) m = std::min(m, c.boundary_margin);
  return m;
}

Network::Network(std::vector<LayerSpec> specs) {
  Require(!specs.empty(), ErrorCode::kConfigError, "network has no layers");
  for (size_t i = 0; i < specs.size(); ++i) {
    specs[i].Validate();
    if (i > 0) {
      const LayerSpec& prev = specs[i - 1];
      Require(specs[i].in_channels == prev.out_channels &&
                  specs[i].in_height == prev.out_height() &&
                  specs[i].in_width == prev.out_width(),
              ErrorCode::kConfigError,
              "layer " + std::to_string(i) + " input does not match layer " +
                  std::to_string(i - 1) + " output");
    }
    layers_.push_back({specs[i], std::vector<double>(specs[i].weight_count(), 0.0)});
  }
}

Network Network::Build(InputShape input, std::span<const LayerDef> defs) {
  std::vector<LayerSpec> specs;
  int c = input.channels, h = input.height, w = input.width;
  for (const LayerDef& d : defs) {
    LayerSpec s;
    s.kind = d.kind;
    s.in_channels = c;
    s.in_height = h;
    s.in_width = w;
    s.out_channels = d.out_channels;
    s.kernel = d.kind == LayerKind::kConv ? d.kernel : 1;
    s.stride = d.kind == LayerKind::kConv ? d.stride : 1;
    s.Validate();
    c = s.out_channels;
    h = s.out_height();
    w = s.out_width();
    specs.push_back(s);
  }
  return Network(std::move(specs));
}

InputShape Network::input_shape() const {
  const LayerSpec& s = layers_.front().spec;
  return {s.in_channels, s.in_height, s.in_width};
}

int Network::class_count() const {
  return static_cast<int>(layers_.back().spec.output_size());
}

size_t Network::parameter_count() const {
  size_t n = 0;
  for (const Layer& l : layers_) n += l.weights.size();
  return n;
}

ForwardResult Network::Forward(const ZMap& input) const {
  for (const Layer& l : layers_) {
    for (double w : l.weights) {
      Require(std::isfinite(w), ErrorCode::kNonFiniteWeight,
              "network holds a non-finite weight");
    }
  }
  ForwardResult result;
  result.caches.reserve(layers_.size());
  const ZMap* current = &input;
  for (const Layer& l : layers_) {
    result.caches.push_back(LayerForward(l.spec, l.weights, *current));
    current = &result.caches.back().output;
  }
  return result;
}

Gradients Network::ZeroGradients() const {
  Gradients g;
  g.reserve(layers_.size());
  for (const Layer& l : layers_) g.emplace_back(l.weights.size(), 0.0);
  return g;
}

Gradients Network::Backward(const ForwardResult& forward,
                            std::span<const double> output_grad) const {
  Require(forward.caches.size() == layers_.size(), ErrorCode::kStaleCache,
          "forward result has a different layer count");
  Gradients grad = ZeroGradients();
  std::vector<double> upstream(output_grad.begin(), output_grad.end());
  std::vector<double> downstream;
  for (size_t i = layers_.size(); i-- > 0;) {
    const Layer& l = layers_[i];
    downstream.assign(l.spec.input_size(), 0.0);
    LayerBackward(l.spec, l.weights, forward.caches[i], upstream, grad[i],
                  downstream);
    upstream.swap(downstream);
  }
  return grad;
}

void Network::InitWeights(uint64_t seed, std::span<const double> weight_sums,
                          double spread) {
  Require(weight_sums.size() == 1 || weight_sums.size() == layers_.size(),
          ErrorCode::kConfigError,
          "init weight sums must have one entry or one per layer");
  Rng rng(seed);
  for (size_t i = 0; i < layers_.size(); ++i) {
    Layer& l = layers_[i];
    const double target = weight_sums.size() == 1 ? weight_sums[0] : weight_sums[i];
    const double fan_in = static_cast<double>(l.spec.fan_in());
    const double mean = target / fan_in;
    const double sigma = spread / std::sqrt(fan_in);
    for (double& w : l.weights) w = mean + sigma * rng.Normal();
  }
}

PenaltyResult WeightSumPenalty(const Network& net, double k) {
  Require(k >= 0.0, ErrorCode::kInvalidArgument, "penalty K must be >= 0");
  PenaltyResult out;
  out.grad = net.ZeroGradients();
  if (k == 0.0) return out;
  for (size_t i = 0; i < net.layer_count(); ++i) {
    const Layer& l = net.layer(i);
    const size_t fan_in = l.spec.fan_in();
    for (int o = 0; o < l.spec.out_channels; ++o) {
      const size_t begin = static_cast<size_t>(o) * fan_in;
      double sum = 0.0;
      for (size_t j = begin; j < begin + fan_in; ++j) sum += l.weights[j];
      if (sum < 1.0) {
        out.value += k * (1.0 - sum);
        for (size_t j = begin; j < begin + fan_in; ++j) out.grad[i][j] = -k;
      }
    }
  }
  return out;
}

int PredictClass(const ZMap& class_z) {
  int best = -1;
  double best_z = kNoSpike;
  for (size_t i = 0; i < class_z.size(); ++i) {
    if (class_z[i] < best_z) {
      best_z = class_z[i];
      best = static_cast<int>(i);
    }
  }
  return best;
}

}  // namespace aerspike
