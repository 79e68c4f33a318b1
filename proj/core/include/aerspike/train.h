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

#ifndef AERSPIKE_TRAIN_H_
#define AERSPIKE_TRAIN_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "aerspike/network.h"
#include "aerspike/ztime.h"

namespace aerspike {

struct LabeledZMap {
  ZMap input;
  int label = 0;
};

struct TrainConfig {
  int epochs_total = 100;
  int phase1_epochs = 50;  // epochs run at lr_phase1; the rest use lr_phase2
  double lr_phase1 = 1e-2;
  double lr_phase2 = 1e-3;
  int batch_size = 32;
  double penalty_k = 100.0;
  uint64_t seed = 1;
  int num_threads = 1;
  // Rescales the batch gradient (loss plus penalty) to this global L2 norm
  // when it is larger. 0 disables clipping.
  double max_grad_norm = 0.0;

  void Validate() const;
  double LearningRate(int epoch) const {
    return epoch < phase1_epochs ? lr_phase1 : lr_phase2;
  }
};

struct EpochStats {
  int epoch = 0;  // 0-based
  double learning_rate = 0.0;
  double train_loss = 0.0;  // mean cross-entropy over samples that produced one
  double penalty = 0.0;     // weight-sum penalty at the end of the epoch
  double train_accuracy = 0.0;
  double test_accuracy = 0.0;  // NaN without a test set
  int no_decision = 0;         // samples with every class silent
  int silent_target = 0;       // samples whose target class stayed silent
  double wall_seconds = 0.0;
};

struct TrainReport {
  std::vector<EpochStats> epochs;
};

// Scales grad in place so its global L2 norm is at most max_norm. Returns the
// norm before scaling.
double ClipGlobalNorm(Gradients& grad, double max_norm);

using EpochCallback = std::function<void(const Network&, const EpochStats&)>;

// Mini-batch gradient descent on cross-entropy plus K * weight-sum penalty
// with the two-phase learning-rate schedule. Epochs start_epoch ..
// epochs_total - 1 are run; each shuffles the training set with a seed
// derived from (seed, epoch), so resuming reproduces an uninterrupted run.
// A sample with every class silent counts as no_decision and one whose
// target stays silent counts as silent_target; neither contributes a loss.
// With num_threads > 1 each batch is split into fixed contiguous chunks
// whose gradients are summed in chunk order. Throws EmptyDataset.
TrainReport Train(Network& net, std::span<const LabeledZMap> train_set,
                  std::span<const LabeledZMap> test_set,
                  const TrainConfig& config, int start_epoch = 0,
                  const EpochCallback& on_epoch = {});

}  // namespace aerspike

#endif  // AERSPIKE_TRAIN_H_
