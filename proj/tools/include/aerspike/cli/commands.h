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

#ifndef AERSPIKE_CLI_COMMANDS_H_
#define AERSPIKE_CLI_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "aerspike/cli/config.h"
#include "aerspike/error.h"

namespace aerspike::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;  // bad flags or config
inline constexpr int kExitIo = 3;     // missing or unwritable files
inline constexpr int kExitData = 4;   // malformed or inconsistent inputs

int ExitCodeFor(ErrorCode code);

// Creates <out_root>/<command>-<YYYYmmdd-HHMMSS>, adding -2, -3 ... if the
// name is taken, and writes the resolved config to config.json inside it.
std::filesystem::path CreateRunDirectory(const std::filesystem::path& out_root,
                                         std::string_view command,
                                         const PipelineConfig& config);

// Reads .bin (N-MNIST) or .csv by extension.
EventStream ReadEventFile(const std::filesystem::path& path, Geometry geometry);

struct EncodeSummary {
  size_t events_in = 0;
  size_t events_out = 0;
  double n_s_raw = 0.0;
  double n_s_encoded = 0.0;
};
// SS-TE encodes one recording and writes it as CSV.
EncodeSummary CmdEncode(const PipelineConfig& config,
                        const std::filesystem::path& input,
                        const std::filesystem::path& output, std::ostream& log);

// For each SNR block and theta: synthesizes signal and noise, mixes, encodes
// and scores. Writes denoise.csv and denoise.json into run_dir.
void CmdDenoiseBench(const PipelineConfig& config,
                     const std::filesystem::path& run_dir, std::ostream& log);

// Trains on the configured dataset, checkpointing after every epoch. With
// `resume` the network and epoch counter come from that checkpoint. Writes
// checkpoint.txt, train_report.csv, timing.csv and train_summary.json.
void CmdTrain(const PipelineConfig& config,
              const std::optional<std::filesystem::path>& resume,
              const std::filesystem::path& run_dir, std::ostream& log);

// Accuracy of a checkpoint on one split; writes eval.json. Throws
// GeometryMismatch / ShapeMismatch when the checkpoint does not fit the
// dataset.
void CmdEval(const PipelineConfig& config,
             const std::filesystem::path& checkpoint, std::string_view split,
             const std::filesystem::path& run_dir, std::ostream& log);

// Raw versus encoded first-layer cost and spike statistics over one split;
// writes cost.json.
void CmdCost(const PipelineConfig& config, std::string_view split,
             const std::filesystem::path& run_dir, std::ostream& log);

struct ToyOptions {
  int num_classes = 3;
  int train_per_class = 60;
  int test_per_class = 30;
  uint64_t seed = 1;
  SampleFormat format = SampleFormat::kNmnist;
};
// Writes a synthetic shape dataset in the dataset directory layout.
void CmdGenToy(const ToyOptions& options, const std::filesystem::path& root,
               std::ostream& log);

}  // namespace aerspike::cli

#endif  // AERSPIKE_CLI_COMMANDS_H_
