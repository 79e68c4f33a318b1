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

#include "aerspike/evaluation.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "aerspike/error.h"

namespace aerspike {
namespace {

using OccurrenceKey = std::tuple<uint64_t, uint16_t, uint16_t, int8_t>;

OccurrenceKey KeyOf(const Event& e) { return {e.t, e.x, e.y, e.p}; }

struct LabelCounts {
  size_t signal = 0;
  size_t noise = 0;
};

}  // namespace

DenoiseMetrics ComputeDenoiseMetrics(const EventStream& input,
                                     const EventStream& retained) {
  DenoiseMetrics m;
  std::map<OccurrenceKey, LabelCounts> available;
  for (const Event& e : input.events()) {
    Require(e.label != EventLabel::kNone, ErrorCode::kUnlabeledEvent,
            "input event at t=" + std::to_string(e.t) + " has no label");
    LabelCounts& c = available[KeyOf(e)];
    if (e.label == EventLabel::kSignal) {
      ++c.signal;
      ++m.signal_total;
    } else {
      ++c.noise;
      ++m.noise_total;
    }
  }
  for (const Event& e : retained.events()) {
    auto it = available.find(KeyOf(e));
    Require(it != available.end() && it->second.signal + it->second.noise > 0,
            ErrorCode::kNotASubset,
            "retained event at t=" + std::to_string(e.t) + " is not in the input");
    LabelCounts& c = it->second;
    // Prefer the retained event's own label when duplicates disagree.
    const bool take_signal =
        c.signal > 0 && (e.label != EventLabel::kNoise || c.noise == 0);
    if (take_signal) {
      --c.signal;
      ++m.signal_retained;
    } else {
      --c.noise;
      ++m.noise_retained;
    }
  }
  m.signal_empty = m.signal_total == 0;
  m.noise_empty = m.noise_total == 0;
  m.tp_rate = m.signal_empty ? 1.0
                             : static_cast<double>(m.signal_retained) /
                                   static_cast<double>(m.signal_total);
  m.fp_rate = m.noise_empty ? 1.0
                            : static_cast<double>(m.noise_retained) /
                                  static_cast<double>(m.noise_total);
  const size_t total = m.signal_total + m.noise_total;
  m.snr = total == 0 ? 1.0
                     : static_cast<double>(m.signal_total) /
                           static_cast<double>(total);
  return m;
}

std::vector<DenoiseMetrics> RocSweep(const SsteConfig& base,
                                     std::span<const double> thetas,
                                     const MixedStream& mixed) {
  Require(!thetas.empty(), ErrorCode::kInvalidArgument, "theta sweep is empty");
  Require(std::is_sorted(thetas.begin(), thetas.end()),
          ErrorCode::kInvalidArgument, "theta sweep must be ascending");
  std::vector<DenoiseMetrics> rows;
  rows.reserve(thetas.size());
  for (double theta : thetas) {
    SsteConfig config = base;
    config.theta = theta;
    const EventStream encoded = EncodeStream(config, mixed.stream);
    DenoiseMetrics m = ComputeDenoiseMetrics(mixed.stream, encoded);
    m.snr = mixed.snr;
    m.theta = theta;
    rows.push_back(m);
  }
  return rows;
}

double Accuracy(const Network& net, std::span<const LabeledZMap> dataset) {
  Require(!dataset.empty(), ErrorCode::kEmptyDataset, "dataset is empty");
  size_t correct = 0;
  for (const LabeledZMap& s : dataset) {
    if (PredictClass(net.Forward(s.input).output()) == s.label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(dataset.size());
}

SpikeStats ComputeSpikeStats(const EventStream& raw, const EventStream& encoded) {
  Require(raw.geometry() == encoded.geometry(), ErrorCode::kGeometryMismatch,
          "raw and encoded streams have different geometry");
  SpikeStats s;
  const std::vector<uint32_t> counts = raw.PixelCounts();
  s.active_pixels = static_cast<size_t>(
      std::count_if(counts.begin(), counts.end(), [](uint32_t c) { return c > 0; }));
  s.raw_events = raw.size();
  s.encoded_events = encoded.size();
  if (s.active_pixels > 0) {
    s.n_s_raw = static_cast<double>(s.raw_events) / s.active_pixels;
    s.n_s_encoded = static_cast<double>(s.encoded_events) / s.active_pixels;
  }
  return s;
}

CostReport ComputeCost(double n_e, const LayerSpec& first_layer) {
  Require(n_e >= 0.0, ErrorCode::kInvalidArgument, "n_e must be >= 0");
  CostReport r;
  r.n_e = n_e;
  r.n_c = first_layer.kind == LayerKind::kConv
              ? static_cast<uint64_t>(first_layer.kernel) * first_layer.kernel *
                    first_layer.out_channels
              : static_cast<uint64_t>(first_layer.out_channels);
  r.total = n_e * static_cast<double>(r.n_c);
  return r;
}

}  // namespace aerspike
