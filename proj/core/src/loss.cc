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

#include "aerspike/loss.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "aerspike/error.h"

namespace aerspike {
namespace {

// Returns min z; validates the vector for Loss / LossGrad.
double CheckedMin(std::span<const double> z, int label) {
  Require(label >= 0 && static_cast<size_t>(label) < z.size(),
          ErrorCode::kInvalidArgument,
          "label " + std::to_string(label) + " out of range");
  Require(std::isfinite(z[label]), ErrorCode::kNonFiniteInput,
          "target class output is not finite");
  double lo = z[label];
  for (double v : z) {
    Require(!std::isnan(v) && v != -std::numeric_limits<double>::infinity(),
            ErrorCode::kNonFiniteInput, "class output is NaN or -inf");
    lo = std::min(lo, v);
  }
  return lo;
}

}  // namespace

double Loss(std::span<const double> z, int label) {
  const double lo = CheckedMin(z, label);
  // log1p over every term but the one at the minimum: exact when the
  // target wins by a wide margin and the loss is tiny.
  const size_t arg_lo = static_cast<size_t>(std::find(z.begin(), z.end(), lo) - z.begin());
  double rest = 0.0;
  for (size_t i = 0; i < z.size(); ++i) {
    if (i != arg_lo) rest += std::exp(-(z[i] - lo));
  }
  return (z[label] - lo) + std::log1p(rest);
}

std::vector<double> LossGrad(std::span<const double> z, int label) {
  const double lo = CheckedMin(z, label);
  std::vector<double> p(z.size());
  double sum = 0.0;
  for (size_t i = 0; i < z.size(); ++i) {
    p[i] = std::exp(-(z[i] - lo));
    sum += p[i];
  }
  double others = 0.0;
  for (size_t i = 0; i < z.size(); ++i) {
    if (i != static_cast<size_t>(label)) others += p[i];
  }
  for (size_t i = 0; i < z.size(); ++i) p[i] = -p[i] / sum;
  p[label] = others / sum;
  return p;
}

void SgdStep(std::span<double> weights, std::span<const double> grads,
             double lr) {
  Require(weights.size() == grads.size(), ErrorCode::kShapeMismatch,
          "weights and gradients differ in size");
  for (size_t i = 0; i < weights.size(); ++i) weights[i] -= lr * grads[i];
}

}  // namespace aerspike
