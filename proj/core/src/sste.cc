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

#include "aerspike/sste.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "aerspike/error.h"

namespace aerspike {

void SsteConfig::Validate() const {
  Require(std::isfinite(tau_c_us) && tau_c_us > 0.0,
          ErrorCode::kInvalidArgument, "sste.tau_c_us must be > 0");
  Require(beta >= 1, ErrorCode::kInvalidArgument, "sste.beta must be >= 1");
  Require(std::isfinite(theta) && theta > 0.0, ErrorCode::kInvalidArgument,
          "sste.theta must be > 0");
  Require(std::isfinite(w_neigh) && w_neigh > 0.0, ErrorCode::kInvalidArgument,
          "sste.w_neigh must be > 0");
  Require(std::isfinite(w_self) && w_self <= 0.0, ErrorCode::kInvalidArgument,
          "sste.w_self must be <= 0");
  Require(max_spikes_per_pixel >= 1, ErrorCode::kInvalidArgument,
          "sste.max_spikes_per_pixel must be >= 1");
}

SsteEncoder::SsteEncoder(const SsteConfig& config, Geometry geometry)
    : config_(config),
      geometry_(geometry),
      membrane_(geometry.pixel_count(), 0.0),
      last_update_(geometry.pixel_count(), 0),
      fired_count_(geometry.pixel_count(), 0) {
  config_.Validate();
}

void SsteEncoder::Reset() {
  std::fill(membrane_.begin(), membrane_.end(), 0.0);
  std::fill(last_update_.begin(), last_update_.end(), 0);
  std::fill(fired_count_.begin(), fired_count_.end(), 0);
  last_event_t_ = 0;
}

void SsteEncoder::DecayTo(size_t index, uint64_t t) {
  const uint64_t dt = t - last_update_[index];
  if (dt != 0 && membrane_[index] != 0.0) {
    membrane_[index] *= std::exp(-static_cast<double>(dt) / config_.tau_c_us);
  }
  last_update_[index] = t;
}

std::optional<Event> SsteEncoder::Process(const Event& event) {
  Require(event.t >= last_event_t_, ErrorCode::kOutOfOrderEvent,
          "event at t=" + std::to_string(event.t) + " precedes t=" +
              std::to_string(last_event_t_));
  Require(geometry_.contains(event.x, event.y), ErrorCode::kOutOfBounds,
          "event address outside encoder geometry");
  last_event_t_ = event.t;

  const size_t center = geometry_.index(event.x, event.y);
  DecayTo(center, event.t);

  std::optional<Event> emitted;
  if (fired_count_[center] < config_.max_spikes_per_pixel &&
      membrane_[center] >= config_.theta) {
    ++fired_count_[center];
    emitted = event;
  }
  membrane_[center] += config_.w_self;

  const int reach = config_.beta - 1;
  const int x0 = std::max(0, event.x - reach);
  const int x1 = std::min<int>(geometry_.width - 1, event.x + reach);
  const int y0 = std::max(0, event.y - reach);
  const int y1 = std::min<int>(geometry_.height - 1, event.y + reach);
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const size_t j = geometry_.index(x, y);
      if (j == center) continue;
      DecayTo(j, event.t);
      membrane_[j] += config_.w_neigh;
    }
  }
  return emitted;
}

EventStream EncodeStream(const SsteConfig& config, const EventStream& stream) {
  SsteEncoder encoder(config, stream.geometry());
  std::vector<Event> out;
  for (const Event& e : stream.events()) {
    if (std::optional<Event> spike = encoder.Process(e)) out.push_back(*spike);
  }
  return EventStream(stream.geometry(), std::move(out), stream.duration_us());
}

}  // namespace aerspike
