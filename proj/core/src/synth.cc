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

#include "aerspike/synth.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "aerspike/error.h"
#include "aerspike/random.h"

namespace aerspike {
namespace {

constexpr uint64_t kNever = std::numeric_limits<uint64_t>::max();

int8_t RandomPolarity(Rng& rng) { return rng.Bernoulli(0.5) ? 1 : -1; }

// Drops events that lack another event in their 3x3 neighbourhood within
// `window_us`, repeating until stable. Each pixel holds at most one event.
std::vector<Event> PruneUnsupported(Geometry geometry, std::vector<Event> events,
                                    uint64_t window_us) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<uint64_t> time_at(geometry.pixel_count(), kNever);
    for (const Event& e : events) time_at[geometry.index(e.x, e.y)] = e.t;
    std::vector<Event> kept;
    kept.reserve(events.size());
    for (const Event& e : events) {
      bool supported = false;
      for (int dy = -1; dy <= 1 && !supported; ++dy) {
        for (int dx = -1; dx <= 1 && !supported; ++dx) {
          if (dx == 0 && dy == 0) continue;
          const int nx = e.x + dx;
          const int ny = e.y + dy;
          if (nx < 0 || ny < 0 || !geometry.contains(nx, ny)) continue;
          const uint64_t t = time_at[geometry.index(nx, ny)];
          if (t == kNever) continue;
          const uint64_t gap = t > e.t ? t - e.t : e.t - t;
          supported = gap <= window_us;
        }
      }
      if (supported) {
        kept.push_back(e);
      } else {
        changed = true;
      }
    }
    events = std::move(kept);
  }
  return events;
}

std::vector<Event> MovingBarEvents(Geometry geometry, uint64_t duration_us,
                                   double fire_probability, Rng& rng) {
  const BarExtent bar = MovingBarExtent(geometry);
  const double column_us =
      static_cast<double>(duration_us) / static_cast<double>(geometry.width);
  std::vector<Event> events;
  for (uint32_t c = 0; c < geometry.width; ++c) {
    // Integer timestamps inside [c, c + 1) * column_us.
    const uint64_t lo = static_cast<uint64_t>(std::ceil(c * column_us));
    const uint64_t hi = static_cast<uint64_t>(std::ceil((c + 1) * column_us));
    if (hi <= lo) continue;
    for (uint32_t r = bar.row_begin; r < bar.row_end; ++r) {
      if (!rng.Bernoulli(fire_probability)) continue;
      Event e;
      e.t = lo + rng.UniformInt(hi - lo);
      e.x = static_cast<uint16_t>(c);
      e.y = static_cast<uint16_t>(r);
      e.p = 1;
      e.label = EventLabel::kSignal;
      events.push_back(e);
    }
  }
  return events;
}

std::vector<Event> MovingBlobEvents(Geometry geometry, uint64_t duration_us,
                                    double fire_probability, Rng& rng) {
  const double radius = std::min(geometry.width, geometry.height) / 4.0;
  const double center_y = geometry.height / 2.0;
  const double travel = geometry.width + 2.0 * radius;
  const double us_per_pixel = static_cast<double>(duration_us) / travel;
  std::vector<Event> events;
  for (uint32_t y = 0; y < geometry.height; ++y) {
    const double dy = y + 0.5 - center_y;
    if (std::abs(dy) >= radius) continue;
    const double half_chord = std::sqrt(radius * radius - dy * dy);
    for (uint32_t x = 0; x < geometry.width; ++x) {
      if (!rng.Bernoulli(fire_probability)) continue;
      // Disk centre x at entry: pixel centre minus half chord.
      const double enter_x = x + 0.5 - half_chord;
      const double t_enter = (enter_x + radius) * us_per_pixel;
      const double t = t_enter + rng.Uniform() * us_per_pixel;
      Event e;
      e.t = static_cast<uint64_t>(std::clamp(
          t, 0.0, static_cast<double>(duration_us - 1)));
      e.x = static_cast<uint16_t>(x);
      e.y = static_cast<uint16_t>(y);
      e.p = 1;
      e.label = EventLabel::kSignal;
      events.push_back(e);
    }
  }
  return events;
}

size_t CandidateCount(SignalPattern pattern, Geometry geometry) {
  if (pattern == SignalPattern::kMovingBar) {
    const BarExtent bar = MovingBarExtent(geometry);
    return size_t{geometry.width} * (bar.row_end - bar.row_begin);
  }
  const double radius = std::min(geometry.width, geometry.height) / 4.0;
  size_t rows = 0;
  for (uint32_t y = 0; y < geometry.height; ++y) {
    if (std::abs(y + 0.5 - geometry.height / 2.0) < radius) ++rows;
  }
  return rows * geometry.width;
}

// Signed distance (pixels) from point (dx, dy), relative to the shape
// centre, to the boundary of the class shape. Negative inside.
double ShapeDistance(int class_id, double dx, double dy) {
  auto box = [](double px, double py, double hx, double hy) {
    const double qx = std::abs(px) - hx;
    const double qy = std::abs(py) - hy;
    const double ox = std::max(qx, 0.0);
    const double oy = std::max(qy, 0.0);
    return std::sqrt(ox * ox + oy * oy) + std::min(std::max(qx, qy), 0.0);
  };
  switch (class_id) {
    case 0:
      return box(dx, dy, 8.0, 2.0);
    case 1:
      return box(dx, dy, 2.0, 8.0);
    case 2:
      return std::abs(std::hypot(dx, dy) - 7.0) - 1.75;
    case 3: {
      // Segment (-6,-6)-(6,6), half thickness 2.
      const double h = std::clamp((dx + dy + 12.0) / 24.0, 0.0, 1.0);
      const double ex = dx - (-6.0 + 12.0 * h);
      const double ey = dy - (-6.0 + 12.0 * h);
      return std::hypot(ex, ey) - 2.0;
    }
    case 4:
      return std::min(box(dx, dy, 7.0, 1.5), box(dx, dy, 1.5, 7.0));
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  "shape class " + std::to_string(class_id) + " out of range");
  }
}

}  // namespace

SignalPattern ParseSignalPattern(std::string_view name) {
  if (name == "moving_bar") return SignalPattern::kMovingBar;
  if (name == "moving_blob") return SignalPattern::kMovingBlob;
  throw Error(ErrorCode::kConfigError,
              "unknown signal pattern '" + std::string(name) + "'");
}

NoiseKind ParseNoiseKind(std::string_view name) {
  if (name == "type1" || name == "TypeI") return NoiseKind::kTypeI;
  if (name == "type2" || name == "TypeII") return NoiseKind::kTypeII;
  throw Error(ErrorCode::kConfigError,
              "unknown noise kind '" + std::string(name) + "'");
}

BarExtent MovingBarExtent(Geometry geometry) {
  const uint32_t margin = geometry.height / 8;
  return {margin, geometry.height - margin};
}

uint64_t MixSeed(uint64_t seed, uint64_t salt) {
  uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

EventStream SynthSignal(SignalPattern pattern, Geometry geometry,
                        uint64_t duration_us, double event_rate,
                        uint64_t seed) {
  Require(event_rate > 0.0, ErrorCode::kInvalidArgument,
          "event_rate must be positive");
  Require(duration_us >= geometry.width && geometry.pixel_count() > 0,
          ErrorCode::kInvalidArgument,
          "duration must cover at least one microsecond per column");
  Rng rng(seed);
  const double expected = event_rate * static_cast<double>(duration_us) * 1e-6;
  const double fire_probability = std::min(
      1.0, expected / static_cast<double>(CandidateCount(pattern, geometry)));
  std::vector<Event> events =
      pattern == SignalPattern::kMovingBar
          ? MovingBarEvents(geometry, duration_us, fire_probability, rng)
          : MovingBlobEvents(geometry, duration_us, fire_probability, rng);
  events = PruneUnsupported(geometry, std::move(events), kSignalClusterWindowUs);
  return EventStream(geometry, std::move(events), duration_us);
}

EventStream SynthNoise(NoiseKind kind, Geometry geometry, uint64_t duration_us,
                       double rate, uint64_t seed,
                       const NoiseOptions& options) {
  Require(rate > 0.0, ErrorCode::kInvalidArgument, "noise rate must be positive");
  Require(geometry.pixel_count() > 0, ErrorCode::kInvalidArgument,
          "empty geometry");
  Rng rng(seed);
  std::vector<Event> events;
  const double rate_per_us = rate * 1e-6;

  if (kind == NoiseKind::kTypeI) {
    constexpr int kMaxRedraws = 64;
    std::vector<uint64_t> last(geometry.pixel_count(), kNever);
    double t = 0.0;
    while (true) {
      t += rng.Exponential(rate_per_us);
      if (t >= static_cast<double>(duration_us)) break;
      const uint64_t ti = static_cast<uint64_t>(t);
      for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        const size_t idx = rng.UniformInt(geometry.pixel_count());
        if (last[idx] != kNever && ti - last[idx] < options.self_window_us) {
          continue;
        }
        last[idx] = ti;
        Event e;
        e.t = ti;
        e.x = static_cast<uint16_t>(idx % geometry.width);
        e.y = static_cast<uint16_t>(idx / geometry.width);
        e.p = RandomPolarity(rng);
        e.label = EventLabel::kNoise;
        events.push_back(e);
        break;
      }
    }
  } else {
    Require(options.burst_min >= 3 && options.burst_max >= options.burst_min,
            ErrorCode::kInvalidArgument, "burst sizes must satisfy 3 <= min <= max");
    Require(options.burst_gap_min_us > 0 &&
                options.burst_gap_max_us >= options.burst_gap_min_us &&
                options.burst_gap_max_us < options.self_window_us,
            ErrorCode::kInvalidArgument,
            "burst gaps must be positive and below the self window");
    const double mean_burst = 0.5 * (options.burst_min + options.burst_max);
    double t = 0.0;
    while (true) {
      t += rng.Exponential(rate_per_us / mean_burst);
      if (t >= static_cast<double>(duration_us)) break;
      const size_t idx = rng.UniformInt(geometry.pixel_count());
      const int k = options.burst_min +
                    static_cast<int>(rng.UniformInt(
                        options.burst_max - options.burst_min + 1));
      uint64_t ti = static_cast<uint64_t>(t);
      for (int j = 0; j < k && ti < duration_us; ++j) {
        Event e;
        e.t = ti;
        e.x = static_cast<uint16_t>(idx % geometry.width);
        e.y = static_cast<uint16_t>(idx / geometry.width);
        e.p = RandomPolarity(rng);
        e.label = EventLabel::kNoise;
        events.push_back(e);
        ti += options.burst_gap_min_us +
              rng.UniformInt(options.burst_gap_max_us -
                             options.burst_gap_min_us + 1);
      }
    }
  }
  return EventStream(geometry, std::move(events), duration_us);
}

EventStream SynthShapeSample(int class_id, uint64_t seed,
                             const ShapeOptions& options) {
  Require(class_id >= 0 && class_id < kShapeClassCount,
          ErrorCode::kInvalidArgument, "shape class out of range");
  Require(options.contrast > 0.0 && options.step_us > 0,
          ErrorCode::kInvalidArgument, "contrast and step must be positive");
  const Geometry g = options.geometry;
  Rng rng(seed);
  const double jitter_x = rng.Uniform(-options.position_jitter, options.position_jitter);
  const double jitter_y = rng.Uniform(-options.position_jitter, options.position_jitter);

  // Triangular saccade path, centred on its centroid.
  const double s = options.saccade_pixels;
  const std::array<std::array<double, 2>, 4> path = {{
      {0.0, 0.0}, {0.5 * s, 0.866 * s}, {-0.5 * s, 0.866 * s}, {0.0, 0.0}}};
  const double centroid_y = 0.866 * s * 2.0 / 3.0;
  const uint64_t total_us = 3 * options.saccade_us;

  auto offset_at = [&](uint64_t t) {
    const uint64_t seg = std::min<uint64_t>(t / options.saccade_us, 2);
    const double f = static_cast<double>(t - seg * options.saccade_us) /
                     static_cast<double>(options.saccade_us);
    return std::array<double, 2>{
        path[seg][0] + f * (path[seg + 1][0] - path[seg][0]),
        path[seg][1] + f * (path[seg + 1][1] - path[seg][1]) - centroid_y};
  };
  auto render = [&](uint64_t t, std::vector<double>& out) {
    const auto off = offset_at(t);
    const double cx = g.width / 2.0 + jitter_x + off[0];
    const double cy = g.height / 2.0 + jitter_y + off[1];
    for (uint32_t y = 0; y < g.height; ++y) {
      for (uint32_t x = 0; x < g.width; ++x) {
        const double d = ShapeDistance(class_id, x + 0.5 - cx, y + 0.5 - cy);
        out[g.index(x, y)] = std::clamp(0.5 - d, 0.0, 1.0);
      }
    }
  };

  std::vector<double> reference(g.pixel_count());
  std::vector<double> level(g.pixel_count());
  render(0, reference);
  std::vector<Event> events;
  for (uint64_t t0 = 0; t0 < total_us; t0 += options.step_us) {
    render(t0 + options.step_us, level);
    for (size_t idx = 0; idx < level.size(); ++idx) {
      const double delta = level[idx] - reference[idx];
      const int n = static_cast<int>(std::abs(delta) / options.contrast);
      if (n == 0) continue;
      const int8_t p = delta > 0 ? 1 : -1;
      for (int j = 0; j < n; ++j) {
        Event e;
        e.t = t0 + options.step_us * (j + 1) / (n + 1) +
              rng.UniformInt(options.step_us / (n + 1) + 1) / 2;
        e.x = static_cast<uint16_t>(idx % g.width);
        e.y = static_cast<uint16_t>(idx / g.width);
        e.p = p;
        events.push_back(e);
      }
      reference[idx] += p * n * options.contrast;
    }
  }

  if (options.noise_rate > 0.0) {
    EventStream noise = SynthNoise(NoiseKind::kTypeI, g, total_us,
                                   options.noise_rate, MixSeed(seed, 0x7e));
    for (Event e : noise.events()) {
      e.label = EventLabel::kNone;
      events.push_back(e);
    }
  }
  return EventStream(g, std::move(events), total_us);
}

std::vector<Sample> SynthShapeDataset(int num_classes, int per_class,
                                      uint64_t seed,
                                      const ShapeOptions& options) {
  Require(num_classes >= 1 && num_classes <= kShapeClassCount,
          ErrorCode::kInvalidArgument, "num_classes out of range");
  Require(per_class >= 1, ErrorCode::kInvalidArgument, "per_class must be >= 1");
  std::vector<Sample> samples;
  samples.reserve(static_cast<size_t>(num_classes) * per_class);
  for (int i = 0; i < per_class; ++i) {
    for (int c = 0; c < num_classes; ++c) {
      const uint64_t sub = MixSeed(MixSeed(seed, static_cast<uint64_t>(c)),
                                   static_cast<uint64_t>(i));
      samples.push_back({SynthShapeSample(c, sub, options), c});
    }
  }
  return samples;
}

}  // namespace aerspike
