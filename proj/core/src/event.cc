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

#include "aerspike/event.h"

#include <algorithm>
#include <string>

#include "aerspike/error.h"

namespace aerspike {

EventStream::EventStream(Geometry geometry, std::vector<Event> events)
    : EventStream(geometry, std::move(events), 0) {
  if (!events_.empty()) {
    duration_us_ = events_.back().t - events_.front().t;
  }
}

EventStream::EventStream(Geometry geometry, std::vector<Event> events,
                         uint64_t duration_us)
    : geometry_(geometry), events_(std::move(events)), duration_us_(duration_us) {
  for (const Event& e : events_) {
    Require(geometry_.contains(e.x, e.y), ErrorCode::kOutOfBounds,
            "event (" + std::to_string(e.x) + "," + std::to_string(e.y) +
                ") outside " + std::to_string(geometry_.width) + "x" +
                std::to_string(geometry_.height));
  }
  if (!std::is_sorted(events_.begin(), events_.end(),
                      [](const Event& a, const Event& b) { return a.t < b.t; })) {
    std::stable_sort(events_.begin(), events_.end(),
                     [](const Event& a, const Event& b) { return a.t < b.t; });
  }
}

std::vector<uint32_t> EventStream::PixelCounts() const {
  std::vector<uint32_t> counts(geometry_.pixel_count(), 0);
  for (const Event& e : events_) ++counts[geometry_.index(e.x, e.y)];
  return counts;
}

MixedStream MixStreams(const EventStream& signal, const EventStream& noise) {
  Require(signal.geometry() == noise.geometry(), ErrorCode::kGeometryMismatch,
          "signal and noise streams have different geometry");
  std::vector<Event> merged;
  merged.reserve(signal.size() + noise.size());
  std::merge(signal.events().begin(), signal.events().end(),
             noise.events().begin(), noise.events().end(),
             std::back_inserter(merged),
             [](const Event& a, const Event& b) { return a.t < b.t; });
  const size_t total = merged.size();
  MixedStream out;
  out.snr = total == 0 ? 1.0
                       : static_cast<double>(signal.size()) /
                             static_cast<double>(total);
  out.stream = EventStream(signal.geometry(), std::move(merged),
                           std::max(signal.duration_us(), noise.duration_us()));
  return out;
}

NormalizedStream NormalizeTimestamps(const EventStream& stream,
                                     double t_max_norm) {
  Require(!stream.empty(), ErrorCode::kEmptyStream,
          "cannot normalize an empty stream");
  Require(t_max_norm > 0.0, ErrorCode::kInvalidArgument,
          "t_max_norm must be positive");
  NormalizedStream out;
  out.geometry = stream.geometry();
  out.events.reserve(stream.size());
  const uint64_t first = stream.events().front().t;
  const uint64_t span = stream.events().back().t - first;
  const double scale = span == 0 ? 0.0 : t_max_norm / static_cast<double>(span);
  for (const Event& e : stream.events()) {
    double t = static_cast<double>(e.t - first) * scale;
    // Pin the endpoint exactly; the product can land one ulp off.
    if (span != 0 && e.t - first == span) t = t_max_norm;
    out.events.push_back({t, e.x, e.y, e.p});
  }
  return out;
}

}  // namespace aerspike
