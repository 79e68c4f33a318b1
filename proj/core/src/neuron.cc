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

#include "aerspike/neuron.h"

#include <algorithm>
#include <cmath>

#include "aerspike/error.h"

namespace aerspike {

size_t ScanCausalPrefix(std::span<const Afferent> afferents,
                        std::span<const double> weights, double* z_out,
                        double* weight_sum, double* margin) {
  double weighted_z = 0.0;
  double sum = 0.0;
  const size_t n = afferents.size();
  for (size_t k = 0; k < n; ++k) {
    const Afferent& a = afferents[k];
    const double w = weights[a.weight_index];
    weighted_z += w * a.z;
    sum += w;
    const double z_next = k + 1 < n ? afferents[k + 1].z : kNoSpike;
    if (sum <= 1.0) {
      *margin = std::min(*margin, 1.0 - sum);
      continue;
    }
    *margin = std::min(*margin, sum - 1.0);
    const double candidate = weighted_z / (sum - 1.0);
    const bool after_last = candidate >= a.z;
    const bool before_next = candidate <= z_next;
    if (after_last) *margin = std::min(*margin, candidate - a.z);
    if (Spikes(z_next)) *margin = std::min(*margin, std::abs(z_next - candidate));
    if (after_last && before_next) {
      *z_out = candidate;
      *weight_sum = sum;
      return k + 1;
    }
  }
  *z_out = kNoSpike;
  *weight_sum = 0.0;
  return 0;
}

FirstSpike NeuronFirstSpike(std::span<const double> weights,
                            std::span<const double> inputs) {
  Require(weights.size() == inputs.size(), ErrorCode::kLengthMismatch,
          "weights and inputs differ in length");
  for (double w : weights) {
    Require(std::isfinite(w), ErrorCode::kNonFiniteWeight,
            "weight is not finite");
  }
  std::vector<Afferent> afferents;
  afferents.reserve(inputs.size());
  for (size_t i = 0; i < inputs.size(); ++i) {
    Require(!std::isnan(inputs[i]), ErrorCode::kNonFiniteInput, "input is NaN");
    if (Spikes(inputs[i])) {
      afferents.push_back({inputs[i], static_cast<uint32_t>(i),
                           static_cast<uint32_t>(i)});
    }
  }
  std::sort(afferents.begin(), afferents.end(),
            [](const Afferent& a, const Afferent& b) {
              return a.z < b.z || (a.z == b.z && a.input_index < b.input_index);
            });
  FirstSpike out;
  const size_t prefix = ScanCausalPrefix(afferents, weights, &out.z_out,
                                         &out.weight_sum, &out.boundary_margin);
  out.causal_set.reserve(prefix);
  for (size_t k = 0; k < prefix; ++k) {
    out.causal_set.push_back(afferents[k].input_index);
  }
  return out;
}

}  // namespace aerspike
