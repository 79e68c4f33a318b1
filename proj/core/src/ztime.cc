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

#include "aerspike/ztime.h"

#include <algorithm>
#include <string>

#include "aerspike/error.h"

namespace aerspike {

double ToZ(double t_norm) {
  Require(t_norm >= 0.0, ErrorCode::kNegativeTime,
          "spike time " + std::to_string(t_norm) + " is negative");
  return std::exp(t_norm);
}

double FromZ(double z) {
  if (!Spikes(z)) return kNoSpike;
  return std::log(z);
}

ZMap::ZMap(int channels, int height, int width)
    : channels_(channels),
      height_(height),
      width_(width),
      values_(static_cast<size_t>(channels) * height * width, kNoSpike) {
  Require(channels >= 0 && height >= 0 && width >= 0,
          ErrorCode::kInvalidArgument, "negative ZMap dimension");
}

size_t ZMap::SpikeCount() const {
  return static_cast<size_t>(
      std::count_if(values_.begin(), values_.end(), Spikes));
}

ZMap FirstSpikeZMap(const NormalizedStream& stream) {
  ZMap map(1, static_cast<int>(stream.geometry.height),
           static_cast<int>(stream.geometry.width));
  for (const NormalizedEvent& e : stream.events) {
    double& z = map.at(0, e.y, e.x);
    if (!Spikes(z)) z = ToZ(e.t);
  }
  return map;
}

}  // namespace aerspike
