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

#ifndef AERSPIKE_ZTIME_H_
#define AERSPIKE_ZTIME_H_

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "aerspike/event.h"

namespace aerspike {

// Spike times travel through the network as z = exp(t), with t in units of
// the synaptic time constant. +infinity means "never spikes".
inline constexpr double kNoSpike = std::numeric_limits<double>::infinity();

inline bool Spikes(double z) { return z < kNoSpike; }

// Throws NegativeTime for t < 0 (or NaN).
double ToZ(double t_norm);
// Inverse of ToZ; kNoSpike maps to +infinity.
double FromZ(double z);

// Channel-major (c, y, x) map of z values, initialised to kNoSpike.
class ZMap {
 public:
  ZMap() = default;
  ZMap(int channels, int height, int width);

  int channels() const { return channels_; }
  int height() const { return height_; }
  int width() const { return width_; }
  size_t size() const { return values_.size(); }

  double& at(int c, int y, int x) {
    return values_[(static_cast<size_t>(c) * height_ + y) * width_ + x];
  }
  double at(int c, int y, int x) const {
    return values_[(static_cast<size_t>(c) * height_ + y) * width_ + x];
  }
  double& operator[](size_t i) { return values_[i]; }
  double operator[](size_t i) const { return values_[i]; }
  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  size_t SpikeCount() const;

  friend bool operator==(const ZMap&, const ZMap&) = default;

 private:
  int channels_ = 0;
  int height_ = 0;
  int width_ = 0;
  std::vector<double> values_;
};

// One-channel input map holding, for every pixel, z of its first event.
ZMap FirstSpikeZMap(const NormalizedStream& stream);

}  // namespace aerspike

#endif  // AERSPIKE_ZTIME_H_
