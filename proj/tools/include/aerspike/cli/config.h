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

#ifndef AERSPIKE_CLI_CONFIG_H_
#define AERSPIKE_CLI_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "aerspike/dataset.h"
#include "aerspike/event.h"
#include "aerspike/network.h"
#include "aerspike/sste.h"
#include "aerspike/synth.h"
#include "aerspike/train.h"

namespace aerspike::cli {

struct DatasetSection {
  std::filesystem::path root;  // empty when the config has no dataset
  SampleFormat format = SampleFormat::kNmnist;
  Geometry geometry = kNmnistGeometry;
  int num_classes = 10;
  std::string train_split = "train";
  std::string test_split = "test";
  int max_per_class = 0;  // 0 loads everything
  double t_max_norm = 1.0;
};

struct NetworkSection {
  std::vector<LayerDef> layers;
  // One value for all layers or one per layer.
  std::vector<double> init_weight_sums = {1.5};
  double init_spread = 1.0;
};

struct EvalSection {
  std::vector<double> thetas = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
  std::vector<double> snrs = {0.9, 0.97, 0.98};
  SignalPattern signal_pattern = SignalPattern::kMovingBar;
  std::vector<NoiseKind> noise_kinds = {NoiseKind::kTypeI, NoiseKind::kTypeII};
  double signal_rate = 200000.0;  // events per second
  uint64_t duration_us = 100000;
  Geometry geometry{128, 128};
};

// Everything a command needs. `seed` is the root of every random stream:
// weight init, shuffling and synthetic data draw sub-seeds from it.
struct PipelineConfig {
  uint64_t seed = 1;
  DatasetSection dataset;
  SsteConfig sste;
  NetworkSection network;
  TrainConfig train;
  EvalSection eval;

  // Runs every section's own validation plus cross-section checks. Throws
  // ConfigError.
  void Validate() const;
  // The dataset root must exist when one is configured. Throws IoError.
  void CheckPaths() const;

  uint64_t InitSeed() const { return MixSeed(seed, 1); }
  uint64_t TrainSeed() const { return MixSeed(seed, 2); }
  uint64_t BenchSeed() const { return MixSeed(seed, 3); }
};

// Single-channel network input for a sensor.
inline InputShape InputShapeFor(Geometry g) {
  return InputShape{1, static_cast<int>(g.height), static_cast<int>(g.width)};
}

// Parses a JSON config. Unknown keys are rejected. Relative dataset paths
// resolve against `base_dir`. Throws ConfigError with the offending key.
PipelineConfig ParseConfig(std::string_view json_text,
                           const std::filesystem::path& base_dir);
// Reads and parses a file; relative paths resolve against its directory.
PipelineConfig LoadConfig(const std::filesystem::path& path);
// Round-trippable JSON with every field spelled out.
std::string ConfigToJson(const PipelineConfig& config);

}  // namespace aerspike::cli

#endif  // AERSPIKE_CLI_CONFIG_H_
