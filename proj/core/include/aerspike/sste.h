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

#ifndef AERSPIKE_SSTE_H_
#define AERSPIKE_SSTE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "aerspike/event.h"

namespace aerspike {

// Parameters of the per-pixel leaky integrate-and-fire filter bank.
struct SsteConfig {
  double tau_c_us = 10000.0;   // membrane leak time constant
  int beta = 2;                // neighbourhood is |du| < beta, |dv| < beta
  double theta = 2.0;          // firing threshold
  double w_neigh = 1.0;        // weight of each neighbour event
  double w_self = -1.0;        // weight of each event at the pixel itself
  int max_spikes_per_pixel = 1;

  // Throws InvalidArgument naming the first violated constraint.
  void Validate() const;
};

// Single-spike temporal encoder. Each pixel owns a membrane that decays as
// exp(-dt / tau_c) and is only brought up to date when touched. An incoming
// event at pixel i
//   1. decays V_i to the event time,
//   2. is passed through when V_i >= theta and the pixel has spiked fewer
//      than max_spikes_per_pixel times,
//   3. adds w_self to V_i,
//   4. decays and adds w_neigh to every other pixel in the neighbourhood.
// Emitted events are unmodified copies of inputs.
//
// Single writer: events must be fed in non-decreasing time order.
class SsteEncoder {
 public:
  SsteEncoder(const SsteConfig& config, Geometry geometry);

  // Throws OutOfOrderEvent and OutOfBounds.
  std::optional<Event> Process(const Event& event);

  // Re-arms every pixel; equivalent to a freshly constructed encoder.
  void Reset();

  const SsteConfig& config() const { return config_; }
  const Geometry& geometry() const { return geometry_; }

  // Membrane value as last stored (not decayed to any later time).
  double membrane(uint32_t x, uint32_t y) const {
    return membrane_[geometry_.index(x, y)];
  }
  uint64_t last_update(uint32_t x, uint32_t y) const {
    return last_update_[geometry_.index(x, y)];
  }
  int fired_count(uint32_t x, uint32_t y) const {
    return fired_count_[geometry_.index(x, y)];
  }

 private:
  void DecayTo(size_t index, uint64_t t);

  SsteConfig config_;
  Geometry geometry_;
  std::vector<double> membrane_;
  std::vector<uint64_t> last_update_;
  std::vector<int> fired_count_;
  uint64_t last_event_t_ = 0;
};

// Folds a fresh encoder over `stream`. The result keeps the input geometry
// and duration.
EventStream EncodeStream(const SsteConfig& config, const EventStream& stream);

}  // namespace aerspike

#endif  // AERSPIKE_SSTE_H_
