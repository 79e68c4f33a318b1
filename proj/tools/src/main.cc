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

// aerspike command-line front end.
//
//   aerspike denoise-bench --config configs/denoise.json --out runs
//   aerspike train --config configs/toy3.json --out runs
//   aerspike eval --config configs/toy3.json --checkpoint runs/.../checkpoint.txt
//
// Every command except encode and gen-toy writes into a fresh timestamped
// run directory under --out together with the resolved config.

#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "aerspike/cli/commands.h"
#include "aerspike/cli/config.h"
#include "aerspike/error.h"

namespace {

namespace fs = std::filesystem;
using namespace aerspike;
using namespace aerspike::cli;

struct Flags {
  std::string config_path;
  std::optional<uint64_t> seed;
  std::string out = "runs";
  std::optional<double> theta;
  std::optional<int> epochs;
  std::optional<int> threads;
  std::string input, output, checkpoint, resume;
  std::string split = "test";
  ToyOptions toy;
  std::string toy_format = "nmnist";
};

PipelineConfig ResolveConfig(const Flags& f) {
  PipelineConfig config;
  if (!f.config_path.empty()) config = LoadConfig(f.config_path);
  if (f.seed) config.seed = *f.seed;
  if (f.theta) config.sste.theta = *f.theta;
  if (f.epochs) {
    config.train.epochs_total = *f.epochs;
    config.train.phase1_epochs = std::min(config.train.phase1_epochs, *f.epochs);
  }
  if (f.threads) config.train.num_threads = *f.threads;
  config.Validate();
  config.CheckPaths();
  return config;
}

int Run(int argc, char** argv) {
  CLI::App app{"Single-spike event encoding and first-spike network training"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", f.config_path, "JSON pipeline config")
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", f.seed, "root seed (overrides config)");
    cmd->add_option("--theta", f.theta, "SS-TE threshold (overrides config)");
  };

  CLI::App* encode = app.add_subcommand("encode", "SS-TE encode one recording to CSV");
  add_common(encode);
  encode->add_option("--input", f.input, "raw .bin or .csv recording")->required();
  encode->add_option("--output", f.output, "encoded CSV path")->required();

  CLI::App* bench = app.add_subcommand("denoise-bench", "TP/FP sweep on synthetic mixtures");
  add_common(bench);
  bench->add_option("--out", f.out, "parent of the run directory");

  CLI::App* train = app.add_subcommand("train", "train a network on the dataset");
  add_common(train);
  train->add_option("--out", f.out, "parent of the run directory");
  train->add_option("--epochs", f.epochs, "total epochs (overrides config)");
  train->add_option("--threads", f.threads, "worker threads (overrides config)");
  train->add_option("--resume", f.resume, "continue from this checkpoint")
      ->check(CLI::ExistingFile);

  CLI::App* eval = app.add_subcommand("eval", "accuracy of a checkpoint");
  add_common(eval);
  eval->add_option("--out", f.out, "parent of the run directory");
  eval->add_option("--checkpoint", f.checkpoint, "checkpoint file")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--split", f.split, "dataset split");

  CLI::App* cost = app.add_subcommand("cost", "first-layer cost, raw vs encoded");
  add_common(cost);
  cost->add_option("--out", f.out, "parent of the run directory");
  cost->add_option("--split", f.split, "dataset split");

  CLI::App* gen = app.add_subcommand("gen-toy", "write a synthetic shape dataset");
  gen->add_option("--out", f.out, "dataset root")->required();
  gen->add_option("--classes", f.toy.num_classes, "number of classes");
  gen->add_option("--train-per-class", f.toy.train_per_class, "train samples per class");
  gen->add_option("--test-per-class", f.toy.test_per_class, "test samples per class");
  gen->add_option("--seed", f.toy.seed, "dataset seed");
  gen->add_option("--format", f.toy_format, "nmnist or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      f.toy.format = ParseSampleFormat(f.toy_format);
      CmdGenToy(f.toy, f.out, std::cout);
      return kExitOk;
    }
    const PipelineConfig config = ResolveConfig(f);
    if (encode->parsed()) {
      CmdEncode(config, f.input, f.output, std::cout);
      return kExitOk;
    }
    CLI::App* cmd = app.get_subcommands().front();
    const fs::path run_dir = CreateRunDirectory(f.out, cmd->get_name(), config);
    if (bench->parsed()) {
      CmdDenoiseBench(config, run_dir, std::cout);
    } else if (train->parsed()) {
      std::optional<fs::path> resume;
      if (!f.resume.empty()) resume = f.resume;
      CmdTrain(config, resume, run_dir, std::cout);
    } else if (eval->parsed()) {
      CmdEval(config, f.checkpoint, f.split, run_dir, std::cout);
    } else if (cost->parsed()) {
      CmdCost(config, f.split, run_dir, std::cout);
    }
    std::cout << "run directory: " << run_dir.string() << "\n";
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace

int main(int argc, char** argv) { return Run(argc, argv); }
