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

#ifndef AERSPIKE_LOSS_H_
#define AERSPIKE_LOSS_H_

#include <span>
#include <vector>

namespace aerspike {

// Cross-entropy over softmax(-z):  L = -ln(exp(-z_label) / sum_i exp(-z_i)).
// Evaluated with a max shift. Classes with z = +inf (silent neurons)
// contribute exp(-inf) = 0 exactly. Throws NonFiniteInput when z_label is
// not finite or any entry is NaN or -inf, and InvalidArgument for a bad
// label.
double Loss(std::span<const double> z, int label);

// With p = softmax(-z): dL/dz_label = 1 - p_label and dL/dz_k = -p_k for
// every other class. The entries sum to zero.
std::vector<double> LossGrad(std::span<const double> z, int label);

// w <- w - lr * g. Throws ShapeMismatch.
void SgdStep(std::span<double> weights, std::span<const double> grads,
             double lr);

}  // namespace aerspike

#endif  // AERSPIKE_LOSS_H_
