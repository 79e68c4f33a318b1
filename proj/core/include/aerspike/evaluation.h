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

#ifndef AERSPIKE_EVALUATION_H_
#define AERSPIKE_EVALUATION_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "aerspike/event.h"
#include "aerspike/layer.h"
#include "aerspike/network.h"
#include "aerspike/sste.h"
#include "aerspike/train.h"

namespace aerspike {

// Fraction of labeled signal / noise events that survived encoding.
struct DenoiseMetrics {
  double tp_rate = 1.0;
  double fp_rate = 1.0;
  double snr = 1.0;
  double theta = 0.0;
  size_t signal_total = 0;
  size_t signal_retained = 0;
  size_t noise_total = 0;
  size_t noise_retained = 0;
  // Set when a class had no events; its rate is then reported as 1.0.
  bool signal_empty = false;
  bool noise_empty = false;
};

// `retained` must be a sub-multiset of `input` by (t, x, y, p) and every
// input event must carry a Signal/Noise label. Throws UnlabeledEvent,
// NotASubset.
DenoiseMetrics ComputeDenoiseMetrics(const EventStream& input,
                                     const EventStream& retained);

// Encodes `mixed` once per threshold (everything else from `base`). The
// total retained count is non-increasing along an ascending sweep. TP and
// FP separately usually are too, but with a spike cap a pixel's one spike
// can move between a noise and a signal event as theta changes. Throws InvalidArgument if
// `thetas` is empty or not ascending.
std::vector<DenoiseMetrics> RocSweep(const SsteConfig& base,
                                     std::span<const double> thetas,
                                     const MixedStream& mixed);

// Fraction of samples whose earliest class output equals the label;
// abstentions count as wrong. Throws EmptyDataset.
double Accuracy(const Network& net, std::span<const LabeledZMap> dataset);

// Mean spikes per active pixel, where a pixel is active when it holds at
// least one raw event. Both means share that denominator, so the encoded
// value never exceeds max_spikes_per_pixel. Throws GeometryMismatch.
struct SpikeStats {
  size_t active_pixels = 0;
  size_t raw_events = 0;
  size_t encoded_events = 0;
  double n_s_raw = 0.0;
  double n_s_encoded = 0.0;
};
SpikeStats ComputeSpikeStats(const EventStream& raw, const EventStream& encoded);

// First-layer multiplication count under the dense-neighbourhood
// assumption: every input event drives a full kernel column for each
// output channel, n_c = k * k * out_channels (out_channels for a dense
// first layer). total = n_e * n_c.
struct CostReport {
  double n_e = 0.0;
  uint64_t n_c = 0;
  double total = 0.0;
};
CostReport ComputeCost(double n_e, const LayerSpec& first_layer);

}  // namespace aerspike

#endif  // AERSPIKE_EVALUATION_H_
