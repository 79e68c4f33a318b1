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

#ifndef AERSPIKE_EVENT_H_
#define AERSPIKE_EVENT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace aerspike {

// Sensor size in pixels.
struct Geometry {
  uint32_t width = 0;
  uint32_t height = 0;

  size_t pixel_count() const { return size_t{width} * height; }
  bool contains(uint32_t x, uint32_t y) const { return x < width && y < height; }
  size_t index(uint32_t x, uint32_t y) const { return size_t{y} * width + x; }

  friend bool operator==(const Geometry&, const Geometry&) = default;
};

// N-MNIST recordings are 34x34.
inline constexpr Geometry kNmnistGeometry{34, 34};

// Ground-truth tag used only by the denoising harness.
enum class EventLabel : uint8_t { kNone, kSignal, kNoise };

// One address event. Timestamps are integer microseconds.
struct Event {
  uint64_t t = 0;
  uint16_t x = 0;
  uint16_t y = 0;
  int8_t p = 1;  // +1 or -1
  EventLabel label = EventLabel::kNone;

  // Identity used for subset checks: label is deliberately excluded.
  bool SameOccurrence(const Event& other) const {
    return t == other.t && x == other.x && y == other.y && p == other.p;
  }

  friend bool operator==(const Event&, const Event&) = default;
};

// A time-ordered, geometry-checked event sequence. Immutable once built.
class EventStream {
 public:
  EventStream() = default;

  // Stable-sorts `events` by timestamp and validates every address against
  // `geometry` (throws OutOfBounds). duration_us defaults to the span
  // between the first and last event.
  EventStream(Geometry geometry, std::vector<Event> events);
  EventStream(Geometry geometry, std::vector<Event> events,
              uint64_t duration_us);

  const Geometry& geometry() const { return geometry_; }
  std::span<const Event> events() const { return events_; }
  size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }
  uint64_t duration_us() const { return duration_us_; }
  const Event& operator[](size_t i) const { return events_[i]; }

  // Per-pixel event counts, row-major.
  std::vector<uint32_t> PixelCounts() const;

  friend bool operator==(const EventStream&, const EventStream&) = default;

 private:
  Geometry geometry_;
  std::vector<Event> events_;
  uint64_t duration_us_ = 0;
};

struct Sample {
  EventStream stream;
  int class_label = 0;
};

// Merges a signal and a noise stream. snr = |signal| / (|signal| + |noise|);
// 1.0 when both are empty.
struct MixedStream {
  EventStream stream;
  double snr = 1.0;
};
MixedStream MixStreams(const EventStream& signal, const EventStream& noise);

// Event with a dimensionless real-valued timestamp.
struct NormalizedEvent {
  double t = 0.0;
  uint16_t x = 0;
  uint16_t y = 0;
  int8_t p = 1;
};

struct NormalizedStream {
  Geometry geometry;
  std::vector<NormalizedEvent> events;
};

// Affine map [t_first, t_last] -> [0, t_max_norm]. A zero span maps every
// event to 0. Throws EmptyStream.
NormalizedStream NormalizeTimestamps(const EventStream& stream,
                                     double t_max_norm);

}  // namespace aerspike

#endif  // AERSPIKE_EVENT_H_
