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

#include <cmath>
#include <vector>

#include "aerspike/error.h"
#include "aerspike/sste.h"
#include "aerspike/synth.h"
#include "gtest/gtest.h"
#include "support/oracles.h"

namespace aerspike {
namespace {

Event Ev(uint64_t t, uint16_t x, uint16_t y) {
  Event e;
  e.t = t;
  e.x = x;
  e.y = y;
  return e;
}

TEST(SsteConfigTest, Validation) {
  EXPECT_NO_THROW(SsteConfig{}.Validate());
  auto bad = [](auto mutate) {
    SsteConfig c;
    mutate(c);
    try {
      c.Validate();
    } catch (const Error& e) {
      return e.code() == ErrorCode::kInvalidArgument;
    }
    return false;
  };
  EXPECT_TRUE(bad([](SsteConfig& c) { c.theta = 0.0; }));
  EXPECT_TRUE(bad([](SsteConfig& c) { c.tau_c_us = 0.0; }));
  EXPECT_TRUE(bad([](SsteConfig& c) { c.beta = 0; }));
  EXPECT_TRUE(bad([](SsteConfig& c) { c.w_neigh = 0.0; }));
  EXPECT_TRUE(bad([](SsteConfig& c) { c.w_self = 0.5; }));
  EXPECT_TRUE(bad([](SsteConfig& c) { c.max_spikes_per_pixel = 0; }));
}

TEST(SsteEncoderTest, FreshStateIsZero) {
  SsteEncoder enc(SsteConfig{}, kNmnistGeometry);
  for (uint32_t y = 0; y < 34; ++y) {
    for (uint32_t x = 0; x < 34; ++x) {
      EXPECT_EQ(enc.membrane(x, y), 0.0);
      EXPECT_EQ(enc.fired_count(x, y), 0);
      EXPECT_EQ(enc.last_update(x, y), 0u);
    }
  }
}

TEST(SsteEncoderTest, SupportedEventFires) {
  SsteEncoder enc(SsteConfig{}, kNmnistGeometry);
  EXPECT_FALSE(enc.Process(Ev(0, 9, 10)));
  EXPECT_FALSE(enc.Process(Ev(1000, 11, 10)));
  EXPECT_FALSE(enc.Process(Ev(2000, 10, 11)));
  // Membrane before the centre update, recovered from the stored value.
  const auto out = enc.Process(Ev(3000, 10, 10));
  ASSERT_TRUE(out.has_value());
  EXPECT_EQ(out->t, 3000u);
  const double expected = std::exp(-0.3) + std::exp(-0.2) + std::exp(-0.1);
  EXPECT_NEAR(expected, 2.4643, 1e-4);
  EXPECT_NEAR(enc.membrane(10, 10) - SsteConfig{}.w_self, expected, 1e-12);
  EXPECT_EQ(enc.fired_count(10, 10), 1);
}

TEST(SsteEncoderTest, IsolatedEventDoesNotFire) {
  SsteEncoder enc(SsteConfig{}, kNmnistGeometry);
  EXPECT_FALSE(enc.Process(Ev(500, 3, 3)));
}

TEST(SsteEncoderTest, ShuntsAfterCap) {
  SsteEncoder enc(SsteConfig{}, kNmnistGeometry);
  auto stimulus = [&](uint64_t t0) {
    enc.Process(Ev(t0, 9, 10));
    enc.Process(Ev(t0 + 1, 11, 10));
    enc.Process(Ev(t0 + 2, 10, 11));
    return enc.Process(Ev(t0 + 3, 10, 10));
  };
  EXPECT_TRUE(stimulus(0));
  EXPECT_FALSE(stimulus(100));
}

TEST(SsteEncoderTest, CapOfTwo) {
  SsteConfig c;
  c.max_spikes_per_pixel = 2;
  SsteEncoder enc(c, kNmnistGeometry);
  int fired = 0;
  for (int round = 0; round < 4; ++round) {
    const uint64_t t0 = round * 10;
    for (int k = 0; k < 4; ++k) enc.Process(Ev(t0, 9, 10));
    fired += enc.Process(Ev(t0 + 1, 10, 10)).has_value();
  }
  EXPECT_EQ(fired, 2);
}

TEST(SsteEncoderTest, Errors) {
  SsteEncoder enc(SsteConfig{}, kNmnistGeometry);
  enc.Process(Ev(100, 0, 0));
  try {
    enc.Process(Ev(99, 0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfOrderEvent);
  }
  try {
    enc.Process(Ev(200, 34, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfBounds);
  }
}

TEST(SsteEncoderTest, ResetMatchesFreshEncoder) {
  Rng rng(21);
  const EventStream s = testing::RandomStream(rng, Geometry{12, 12}, 400, 50000);
  const EventStream fresh = EncodeStream(SsteConfig{}, s);
  SsteEncoder enc(SsteConfig{}, s.geometry());
  for (const Event& e : s.events()) enc.Process(e);
  enc.Reset();
  enc.Reset();
  std::vector<Event> again;
  for (const Event& e : s.events()) {
    if (auto out = enc.Process(e)) again.push_back(*out);
  }
  EXPECT_EQ(EventStream(s.geometry(), again, s.duration_us()), fresh);
}

// Lazy decay against a dense 1 us clock (tau_c / 10000) over whole grids.
TEST(SsteOracleTest, LazyDecayMatchesDenseClock) {
  Rng rng(22);
  for (int trial = 0; trial < 6; ++trial) {
    SsteConfig c;
    c.theta = rng.Uniform(0.3, 3.3);
    c.beta = 1 + static_cast<int>(rng.UniformInt(3));
    c.max_spikes_per_pixel = 1 + static_cast<int>(rng.UniformInt(2));
    const EventStream s = testing::RandomStream(
        rng, Geometry{10, 10}, 200 + rng.UniformInt(800), 30000);
    const testing::DenseSsteTrace dense = testing::DenseSste(c, s);
    SsteEncoder enc(c, s.geometry());
    for (size_t i = 0; i < s.size(); ++i) {
      const Event& e = s[i];
      // Grid just before event i, decayed lazily to e.t.
      for (uint32_t y = 0; y < 10; ++y) {
        for (uint32_t x = 0; x < 10; ++x) {
          const double lazy = enc.membrane(x, y) *
                              std::exp(-(static_cast<double>(e.t) -
                                         static_cast<double>(enc.last_update(x, y))) /
                                       c.tau_c_us);
          const double ref = dense.grid_before[i][s.geometry().index(x, y)];
          ASSERT_NEAR(lazy, ref, 1e-6 * std::max(1.0, std::abs(ref)))
              << "trial " << trial << " event " << i << " pixel " << x << "," << y;
        }
      }
      ASSERT_EQ(enc.Process(e).has_value(), dense.emitted[i])
          << "trial " << trial << " event " << i;
    }
  }
}

TEST(SsteInvariantTest, CapSubsetAndOrder) {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    SsteConfig c;
    c.theta = rng.Uniform(0.1, 4.0);
    c.max_spikes_per_pixel = 1 + static_cast<int>(rng.UniformInt(3));
    const Geometry g{static_cast<uint32_t>(2 + rng.UniformInt(30)),
                     static_cast<uint32_t>(2 + rng.UniformInt(30))};
    const EventStream s = testing::RandomStream(rng, g, rng.UniformInt(2000), 50000);
    const EventStream out = EncodeStream(c, s);
    std::vector<uint32_t> counts = out.PixelCounts();
    for (uint32_t n : counts) ASSERT_LE(n, static_cast<uint32_t>(c.max_spikes_per_pixel));
    // Output is an order-preserving subsequence of the input.
    size_t j = 0;
    for (const Event& e : out.events()) {
      while (j < s.size() && !(s[j] == e)) ++j;
      ASSERT_LT(j, s.size()) << "output event not in input";
      ++j;
    }
    EXPECT_LE(out.size(), g.pixel_count() * c.max_spikes_per_pixel);
  }
}

TEST(SsteInvariantTest, EarlierNeighbourNeverLowersCentre) {
  Rng rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const EventStream base = testing::RandomStream(rng, Geometry{8, 8}, 30, 20000);
    const Event centre = Ev(20000, 4, 4);
    std::vector<Event> with(base.events().begin(), base.events().end());
    std::vector<Event> without = with;
    with.push_back(Ev(rng.UniformInt(20000), 4 + (rng.Bernoulli(0.5) ? 1 : -1), 4));
    with.push_back(centre);
    without.push_back(centre);
    auto centre_v = [&](const std::vector<Event>& events) {
      const EventStream s(Geometry{8, 8}, events);
      SsteEncoder enc(SsteConfig{}, s.geometry());
      for (const Event& e : s.events()) enc.Process(e);
      return enc.membrane(4, 4);
    };
    EXPECT_GE(centre_v(with), centre_v(without) - 1e-12);
  }
}

TEST(SsteInvariantTest, SelfBurstSuppressesMarginalEvent) {
  // Three neighbours give 2.4643 at t = 3000. Self events at 100 and 1500
  // (both too weak to fire themselves) subtract e^-0.29 + e^-0.15.
  auto run = [](bool burst) {
    std::vector<Event> events = {Ev(0, 9, 10), Ev(1000, 11, 10), Ev(2000, 10, 11)};
    if (burst) {
      events.push_back(Ev(100, 10, 10));
      events.push_back(Ev(1500, 10, 10));
    }
    events.push_back(Ev(3000, 10, 10));
    SsteEncoder enc(SsteConfig{}, kNmnistGeometry);
    std::optional<Event> last;
    const EventStream stream(kNmnistGeometry, events);
    for (const Event& e : stream.events()) {
      last = enc.Process(e);
      if (e.t < 3000 && e.x == 10 && e.y == 10) {
        EXPECT_FALSE(last.has_value());
      }
    }
    return last.has_value();
  };
  EXPECT_TRUE(run(false));
  EXPECT_FALSE(run(true));
}

TEST(SsteEncodeTest, LowRateTypeINoiseIsNearlyRemoved) {
  const EventStream noise =
      SynthNoise(NoiseKind::kTypeI, kNmnistGeometry, 100000, 2000, 25);
  const EventStream out = EncodeStream(SsteConfig{}, noise);
  EXPECT_LT(static_cast<double>(out.size()), 0.05 * noise.size());
}

}  // namespace
}  // namespace aerspike
