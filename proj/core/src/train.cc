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

#include "aerspike/train.h"

#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "aerspike/error.h"
#include "aerspike/evaluation.h"
#include "aerspike/loss.h"
#include "aerspike/random.h"
#include "aerspike/synth.h"

namespace aerspike {
namespace {

struct ChunkResult {
  Gradients grad;
  double loss_sum = 0.0;
  int used = 0;
  int no_decision = 0;
  int silent_target = 0;
};

void RunChunk(const Network& net, std::span<const LabeledZMap> data,
              std::span<const size_t> indices, ChunkResult& out) {
  out.grad = net.ZeroGradients();
  for (size_t idx : indices) {
    const LabeledZMap& sample = data[idx];
    ForwardResult fwd = net.Forward(sample.input);
    const ZMap& z = fwd.output();
    if (z.SpikeCount() == 0) {
      ++out.no_decision;
      continue;
    }
    if (!Spikes(z[sample.label])) {
      ++out.silent_target;
      continue;
    }
    out.loss_sum += Loss(z.values(), sample.label);
    const std::vector<double> dz = LossGrad(z.values(), sample.label);
    const Gradients g = net.Backward(fwd, dz);
    for (size_t l = 0; l < g.size(); ++l) {
      for (size_t j = 0; j < g[l].size(); ++j) out.grad[l][j] += g[l][j];
    }
    ++out.used;
  }
}

}  // namespace

double ClipGlobalNorm(Gradients& grad, double max_norm) {
  double sq = 0.0;
  for (const auto& layer : grad) {
    for (double g : layer) sq += g * g;
  }
  const double norm = std::sqrt(sq);
  if (norm > max_norm) {
    const double scale = max_norm / norm;
    for (auto& layer : grad) {
      for (double& g : layer) g *= scale;
    }
  }
  return norm;
}

void TrainConfig::Validate() const {
  Require(epochs_total >= 1, ErrorCode::kConfigError, "train.epochs must be >= 1");
  Require(phase1_epochs >= 0, ErrorCode::kConfigError,
          "train.phase1_epochs must be >= 0");
  Require(lr_phase1 >= 0.0 && lr_phase2 >= 0.0 && std::isfinite(lr_phase1) &&
              std::isfinite(lr_phase2),
          ErrorCode::kConfigError, "learning rates must be finite and >= 0");
  Require(batch_size >= 1, ErrorCode::kConfigError, "train.batch_size must be >= 1");
  Require(penalty_k >= 0.0, ErrorCode::kConfigError, "train.penalty_k must be >= 0");
  Require(num_threads >= 1, ErrorCode::kConfigError, "train.threads must be >= 1");
  Require(max_grad_norm >= 0.0 && std::isfinite(max_grad_norm),
          ErrorCode::kConfigError, "train.max_grad_norm must be finite and >= 0");
}

TrainReport Train(Network& net, std::span<const LabeledZMap> train_set,
                  std::span<const LabeledZMap> test_set,
                  const TrainConfig& config, int start_epoch,
                  const EpochCallback& on_epoch) {
  config.Validate();
  Require(!train_set.empty(), ErrorCode::kEmptyDataset, "training set is empty");
  Require(start_epoch >= 0, ErrorCode::kInvalidArgument, "negative start epoch");

  TrainReport report;
  std::vector<size_t> order(train_set.size());
  const size_t threads = static_cast<size_t>(config.num_threads);
  for (int epoch = start_epoch; epoch < config.epochs_total; ++epoch) {
    const auto started = std::chrono::steady_clock::now();
    std::iota(order.begin(), order.end(), size_t{0});
    Rng rng(MixSeed(config.seed, static_cast<uint64_t>(epoch)));
    rng.Shuffle(std::span(order));

    EpochStats stats;
    stats.epoch = epoch;
    stats.learning_rate = config.LearningRate(epoch);
    double loss_sum = 0.0;
    int used = 0;

    for (size_t begin = 0; begin < order.size(); begin += config.batch_size) {
      const size_t end = std::min(order.size(), begin + config.batch_size);
      const std::span<const size_t> batch(order.data() + begin, end - begin);
      const size_t n_chunks = std::min(threads, batch.size());
      std::vector<ChunkResult> chunks(n_chunks);
      auto chunk_span = [&](size_t c) {
        const size_t lo = batch.size() * c / n_chunks;
        const size_t hi = batch.size() * (c + 1) / n_chunks;
        return batch.subspan(lo, hi - lo);
      };
      if (n_chunks == 1) {
        RunChunk(net, train_set, batch, chunks[0]);
      } else {
        std::vector<std::jthread> workers;
        for (size_t c = 0; c < n_chunks; ++c) {
          workers.emplace_back([&, c] {
            RunChunk(net, train_set, chunk_span(c), chunks[c]);
          });
        }
      }

      Gradients total = net.ZeroGradients();
      int batch_used = 0;
      for (const ChunkResult& c : chunks) {
        for (size_t l = 0; l < total.size(); ++l) {
          for (size_t j = 0; j < total[l].size(); ++j) total[l][j] += c.grad[l][j];
        }
        loss_sum += c.loss_sum;
        batch_used += c.used;
        stats.no_decision += c.no_decision;
        stats.silent_target += c.silent_target;
      }
      used += batch_used;

      const PenaltyResult penalty = WeightSumPenalty(net, config.penalty_k);
      const double inv = batch_used > 0 ? 1.0 / batch_used : 0.0;
      for (size_t l = 0; l < total.size(); ++l) {
        for (size_t j = 0; j < total[l].size(); ++j) {
          total[l][j] = total[l][j] * inv + penalty.grad[l][j];
        }
      }
      if (config.max_grad_norm > 0.0) ClipGlobalNorm(total, config.max_grad_norm);
      for (size_t l = 0; l < total.size(); ++l) {
        SgdStep(net.layer(l).weights, total[l], stats.learning_rate);
      }
    }

    stats.train_loss = used > 0 ? loss_sum / used
                                : std::numeric_limits<double>::quiet_NaN();
    stats.penalty = WeightSumPenalty(net, config.penalty_k).value;
    stats.train_accuracy = Accuracy(net, train_set);
    stats.test_accuracy = test_set.empty()
                              ? std::numeric_limits<double>::quiet_NaN()
                              : Accuracy(net, test_set);
    stats.wall_seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    report.epochs.push_back(stats);
    if (on_epoch) on_epoch(net, stats);
  }
  return report;
}

}  // namespace aerspike
