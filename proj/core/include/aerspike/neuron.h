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

#ifndef AERSPIKE_NEURON_H_
#define AERSPIKE_NEURON_H_

#include <cstdint>
#include <span>
#include <vector>

#include "aerspike/ztime.h"

namespace aerspike {

// First spike of a non-leaky integrate-and-fire neuron (threshold 1) driven
// by exponentially decaying synaptic currents. Once the inputs in causal
// set C have arrived the membrane is sum_C w_i (1 - z_i / z), which crosses
// threshold at
//
//   z_out = sum_C w_i z_i / (sum_C w_i - 1).
//
// C is found by adding finite inputs in ascending z (ties by index) and
// accepting the first prefix with sum w > 1 whose z_out lies between the
// last added input and the next one. No such prefix means no spike.
struct FirstSpike {
  double z_out = kNoSpike;
  std::vector<uint32_t> causal_set;  // afferent indices in firing order
  double weight_sum = 0.0;           // sum of weights over causal_set
  // Smallest distance, over every prefix examined, to a point where the
  // causal set would change (z units or weight-sum units).
  double boundary_margin = kNoSpike;
};

// Throws LengthMismatch and NonFiniteWeight.
FirstSpike NeuronFirstSpike(std::span<const double> weights,
                            std::span<const double> inputs);

// One afferent seen by a neuron: its z, where it comes from in the input
// map and which weight it uses.
struct Afferent {
  double z;
  uint32_t input_index;
  uint32_t weight_index;
};

// Core scan shared by the layers. `afferents` must hold only finite inputs,
// already sorted by (z, input_index). On a spike, returns the causal prefix
// length (>= 1) and writes z_out / weight_sum; returns 0 otherwise.
// `margin` is lowered to the boundary distance of every prefix examined.
size_t ScanCausalPrefix(std::span<const Afferent> afferents,
                        std::span<const double> weights, double* z_out,
                        double* weight_sum, double* margin);

}  // namespace aerspike

#endif  // AERSPIKE_NEURON_H_
