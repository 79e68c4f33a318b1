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

#ifndef AERSPIKE_SYNTH_H_
#define AERSPIKE_SYNTH_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "aerspike/event.h"

namespace aerspike {

enum class SignalPattern { kMovingBar, kMovingBlob };
enum class NoiseKind { kTypeI, kTypeII };

SignalPattern ParseSignalPattern(std::string_view name);
NoiseKind ParseNoiseKind(std::string_view name);

// Rows covered by the moving bar: [height/8, height - height/8).
struct BarExtent {
  uint32_t row_begin = 0;
  uint32_t row_end = 0;
};
BarExtent MovingBarExtent(Geometry geometry);

// Pure signal events, all labeled kSignal and with polarity +1.
//
// kMovingBar: a vertical edge sweeps left to right once over the recording
// at width / duration_us pixels per microsecond; the pixel in column c fires
// inside [c, c + 1) / speed. kMovingBlob: a disk of radius min(w, h) / 4
// crosses the sensor horizontally and each pixel fires when the disk first
// covers it. Each candidate pixel fires at most once, with probability
// min(1, event_rate * duration / candidates), so event_rate (events per
// second) sets density. Events left without another signal event in their
// 3x3 neighbourhood within kSignalClusterWindowUs are pruned, so every
// emitted event has neighbour support. Throws InvalidArgument when
// event_rate <= 0 or duration_us == 0.
inline constexpr uint64_t kSignalClusterWindowUs = 10000;

EventStream SynthSignal(SignalPattern pattern, Geometry geometry,
                        uint64_t duration_us, double event_rate,
                        uint64_t seed);

struct NoiseOptions {
  // Type I: no pixel receives two events closer than this.
  // Type II: the maximum gap inside a burst is below this.
  uint64_t self_window_us = 10000;
  int burst_min = 3;
  int burst_max = 5;
  uint64_t burst_gap_min_us = 200;
  uint64_t burst_gap_max_us = 2000;
};

// Noise events, all labeled kNoise with random polarity. `rate` is the
// expected number of events per second. Type I arrivals are Poisson with
// uniformly drawn pixels; a draw that lands within self_window_us of the
// pixel's previous event is redrawn. Type II emits bursts of
// burst_min..burst_max events at one random pixel. Throws InvalidArgument
// when rate <= 0.
EventStream SynthNoise(NoiseKind kind, Geometry geometry, uint64_t duration_us,
                       double rate, uint64_t seed,
                       const NoiseOptions& options = {});

// Shape recordings imitating a saccading DVS sensor: a class-specific
// shape is rendered with anti-aliased edges and moved along three 100 ms
// saccades; each pixel emits an event whenever its brightness drifts by
// `contrast` from the last reference level, then background Type I noise
// is mixed in (labels cleared).
inline constexpr int kShapeClassCount = 5;

struct ShapeOptions {
  Geometry geometry = kNmnistGeometry;
  uint64_t saccade_us = 100000;
  double saccade_pixels = 3.0;
  double position_jitter = 3.0;
  double contrast = 0.15;
  uint64_t step_us = 1000;
  double noise_rate = 50.0;  // events per second
};

// class_id in [0, kShapeClassCount): horizontal bar, vertical bar, ring,
// diagonal, cross.
EventStream SynthShapeSample(int class_id, uint64_t seed,
                             const ShapeOptions& options = {});

// per_class samples of each of the first num_classes shapes, interleaved by
// class. Sample seeds are derived from `seed`, class and index.
std::vector<Sample> SynthShapeDataset(int num_classes, int per_class,
                                      uint64_t seed,
                                      const ShapeOptions& options = {});

// SplitMix64 mixing step used to derive independent sub-seeds.
uint64_t MixSeed(uint64_t seed, uint64_t salt);

}  // namespace aerspike

#endif  // AERSPIKE_SYNTH_H_
