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

#include "aerspike/cli/commands.h"

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <ctime>
#include <sstream>
#include <vector>

#include "aerspike/checkpoint.h"
#include "aerspike/dataset.h"
#include "aerspike/evaluation.h"
#include "aerspike/event_io.h"
#include "aerspike/network.h"
#include "aerspike/sste.h"
#include "aerspike/synth.h"
#include "aerspike/train.h"
#include "json.hpp"

namespace aerspike::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::vector<LabeledZMap> PrepareAll(const std::vector<Sample>& samples,
                                    const PipelineConfig& config) {
  std::vector<LabeledZMap> out;
  out.reserve(samples.size());
  for (const Sample& s : samples) {
    out.push_back(PrepareInput(s, config.sste, config.dataset.t_max_norm));
  }
  return out;
}

std::vector<Sample> LoadSplit(const PipelineConfig& config, std::string_view split) {
  Require(!config.dataset.root.empty(), ErrorCode::kConfigError,
          "config: dataset.root is required for this command");
  config.CheckPaths();
  std::vector<Sample> samples = LoadSampleDirectory(
      config.dataset.root, split, config.dataset.format, config.dataset.geometry,
      config.dataset.num_classes, config.dataset.max_per_class);
  Require(!samples.empty(), ErrorCode::kEmptyDataset,
          "no samples in split '" + std::string(split) + "'");
  return samples;
}

Network BuildNetwork(const PipelineConfig& config) {
  Require(!config.network.layers.empty(), ErrorCode::kConfigError,
          "config: network.layers is required for this command");
  const InputShape input = InputShapeFor(config.dataset.geometry);
  return Network::Build(input, config.network.layers);
}

void WriteJson(const fs::path& path, const json& j) {
  WriteFileAtomically(path, j.dump(2) + "\n");
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfigError:
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    case ErrorCode::kIoError:
      return kExitIo;
    default:
      return kExitData;
  }
}

fs::path CreateRunDirectory(const fs::path& out_root, std::string_view command,
                            const PipelineConfig& config) {
  const std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  localtime_r(&now, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y%m%d-%H%M%S", &tm);
  const std::string base = std::string(command) + "-" + stamp;
  std::error_code ec;
  fs::create_directories(out_root, ec);
  Require(!ec, ErrorCode::kIoError,
          "cannot create " + out_root.string() + ": " + ec.message());
  fs::path dir = out_root / base;
  for (int n = 2; !fs::create_directory(dir, ec); ++n) {
    Require(!ec, ErrorCode::kIoError,
            "cannot create " + dir.string() + ": " + ec.message());
    dir = out_root / (base + "-" + std::to_string(n));
  }
  WriteFileAtomically(dir / "config.json", ConfigToJson(config));
  return dir;
}

EventStream ReadEventFile(const fs::path& path, Geometry geometry) {
  if (path.extension() == ".csv") return ReadCsvEventsFile(path, geometry);
  return ReadNmnistFile(path, geometry);
}

EncodeSummary CmdEncode(const PipelineConfig& config, const fs::path& input,
                        const fs::path& output, std::ostream& log) {
  const EventStream raw = ReadEventFile(input, config.dataset.geometry);
  const EventStream encoded = EncodeStream(config.sste, raw);
  WriteCsvEventsFile(output, encoded);
  const SpikeStats stats = ComputeSpikeStats(raw, encoded);
  EncodeSummary summary{raw.size(), encoded.size(), stats.n_s_raw,
                        stats.n_s_encoded};
  log << "events in " << summary.events_in << ", out " << summary.events_out
      << ", spikes per active pixel " << Num(summary.n_s_raw) << " -> "
      << Num(summary.n_s_encoded) << "\n";
  return summary;
}

void CmdDenoiseBench(const PipelineConfig& config, const fs::path& run_dir,
                     std::ostream& log) {
  const EvalSection& e = config.eval;
  const uint64_t seed = config.BenchSeed();
  const EventStream signal = SynthSignal(e.signal_pattern, e.geometry,
                                         e.duration_us, e.signal_rate,
                                         MixSeed(seed, 0));
  const double seconds = static_cast<double>(e.duration_us) * 1e-6;

  std::ostringstream csv;
  csv << "snr_target,snr,theta,tp_rate,fp_rate,signal_total,signal_retained,"
         "noise_total,noise_retained\n";
  json blocks = json::array();
  for (size_t b = 0; b < e.snrs.size(); ++b) {
    const double target = e.snrs[b];
    const double noise_events =
        static_cast<double>(signal.size()) * (1.0 - target) / target;
    std::vector<Event> noise_events_all;
    if (noise_events > 0.0) {
      const double rate = noise_events / e.noise_kinds.size() / seconds;
      for (size_t k = 0; k < e.noise_kinds.size(); ++k) {
        const EventStream noise =
            SynthNoise(e.noise_kinds[k], e.geometry, e.duration_us, rate,
                       MixSeed(seed, 1 + b * e.noise_kinds.size() + k));
        noise_events_all.insert(noise_events_all.end(), noise.events().begin(),
                                noise.events().end());
      }
    }
    const EventStream noise(e.geometry, std::move(noise_events_all),
                            e.duration_us);
    const MixedStream mixed = MixStreams(signal, noise);
    const std::vector<DenoiseMetrics> rows = RocSweep(config.sste, e.thetas, mixed);

    bool monotone = true;
    json best = nullptr;
    for (size_t i = 0; i < rows.size(); ++i) {
      const DenoiseMetrics& m = rows[i];
      csv << Num(target) << "," << Num(m.snr) << "," << Num(m.theta) << ","
          << Num(m.tp_rate) << "," << Num(m.fp_rate) << "," << m.signal_total
          << "," << m.signal_retained << "," << m.noise_total << ","
          << m.noise_retained << "\n";
      if (i > 0 && (m.tp_rate > rows[i - 1].tp_rate ||
                    m.fp_rate > rows[i - 1].fp_rate)) {
        monotone = false;
      }
      if (best.is_null() || m.tp_rate - m.fp_rate >
                                best["tp_rate"].get<double>() -
                                    best["fp_rate"].get<double>()) {
        best = {{"theta", m.theta}, {"tp_rate", m.tp_rate}, {"fp_rate", m.fp_rate}};
      }
    }
    log << "snr " << Num(mixed.snr) << " (target " << Num(target)
        << "): best theta " << Num(best["theta"].get<double>()) << " TP "
        << Num(best["tp_rate"].get<double>()) << " FP "
        << Num(best["fp_rate"].get<double>())
        << (monotone ? "" : " [sweep not monotone]") << "\n";
    blocks.push_back({{"snr_target", target},
                      {"snr", mixed.snr},
                      {"signal_events", signal.size()},
                      {"noise_events", noise.size()},
                      {"monotone", monotone},
                      {"best_youden", best}});
  }
  WriteFileAtomically(run_dir / "denoise.csv", csv.str());
  WriteJson(run_dir / "denoise.json", {{"blocks", blocks}});
}

void CmdTrain(const PipelineConfig& config, const std::optional<fs::path>& resume,
              const fs::path& run_dir, std::ostream& log) {
  Network net = BuildNetwork(config);
  int start_epoch = 0;
  if (resume) {
    Checkpoint ckpt = LoadCheckpoint(*resume);
    const auto want = net.layers();
    const auto got = ckpt.network.layers();
    bool same = want.size() == got.size();
    for (size_t i = 0; same && i < want.size(); ++i) same = want[i].spec == got[i].spec;
    Require(same, ErrorCode::kShapeMismatch,
            "checkpoint topology differs from config: " + resume->string());
    net = std::move(ckpt.network);
    start_epoch = ckpt.epochs_completed;
    Require(start_epoch < config.train.epochs_total, ErrorCode::kConfigError,
            "checkpoint already has " + std::to_string(start_epoch) +
                " epochs; train.epochs is " +
                std::to_string(config.train.epochs_total));
  } else {
    net.InitWeights(config.InitSeed(), config.network.init_weight_sums,
                    config.network.init_spread);
  }

  const std::vector<LabeledZMap> train =
      PrepareAll(LoadSplit(config, config.dataset.train_split), config);
  std::vector<LabeledZMap> test;
  if (!config.dataset.test_split.empty()) {
    test = PrepareAll(LoadSplit(config, config.dataset.test_split), config);
  }
  log << "training on " << train.size() << " samples, testing on " << test.size()
      << ", " << net.parameter_count() << " weights, epochs " << start_epoch
      << ".." << config.train.epochs_total - 1 << "\n";

  TrainConfig tc = config.train;
  tc.seed = config.TrainSeed();
  std::string report =
      "epoch,learning_rate,train_loss,penalty,train_accuracy,test_accuracy,"
      "no_decision,silent_target\n";
  std::string timing = "epoch,wall_seconds\n";
  EpochStats last;
  Train(net, train, test, tc, start_epoch,
        [&](const Network& n, const EpochStats& s) {
          SaveCheckpoint(run_dir / "checkpoint.txt", n, s.epoch + 1);
          report += std::to_string(s.epoch) + "," + Num(s.learning_rate) + "," +
                    Num(s.train_loss) + "," + Num(s.penalty) + "," +
                    Num(s.train_accuracy) + "," + Num(s.test_accuracy) + "," +
                    std::to_string(s.no_decision) + "," +
                    std::to_string(s.silent_target) + "\n";
          timing += std::to_string(s.epoch) + "," + Num(s.wall_seconds) + "\n";
          WriteFileAtomically(run_dir / "train_report.csv", report);
          WriteFileAtomically(run_dir / "timing.csv", timing);
          log << "epoch " << s.epoch << " loss " << Num(s.train_loss) << " train "
              << Num(s.train_accuracy) << " test " << Num(s.test_accuracy)
              << std::endl;
          last = s;
        });
  json summary = {{"epochs_completed", config.train.epochs_total},
                  {"train_accuracy", last.train_accuracy},
                  {"test_accuracy", test.empty() ? json(nullptr)
                                                 : json(last.test_accuracy)},
                  {"train_samples", train.size()},
                  {"test_samples", test.size()}};
  WriteJson(run_dir / "train_summary.json", summary);
}

void CmdEval(const PipelineConfig& config, const fs::path& checkpoint,
             std::string_view split, const fs::path& run_dir, std::ostream& log) {
  const Checkpoint ckpt = LoadCheckpoint(checkpoint);
  const InputShape want = InputShapeFor(config.dataset.geometry);
  const InputShape got = ckpt.network.input_shape();
  Require(got == want, ErrorCode::kGeometryMismatch,
          "checkpoint input " + std::to_string(got.channels) + "x" +
              std::to_string(got.height) + "x" + std::to_string(got.width) +
              " does not match dataset geometry 1x" +
              std::to_string(want.height) + "x" + std::to_string(want.width));
  Require(ckpt.network.class_count() == config.dataset.num_classes,
          ErrorCode::kShapeMismatch,
          "checkpoint has " + std::to_string(ckpt.network.class_count()) +
              " classes, dataset has " +
              std::to_string(config.dataset.num_classes));
  const std::vector<LabeledZMap> data = PrepareAll(LoadSplit(config, split), config);
  int no_decision = 0;
  for (const LabeledZMap& s : data) {
    if (PredictClass(ckpt.network.Forward(s.input).output()) < 0) ++no_decision;
  }
  const double accuracy = Accuracy(ckpt.network, data);
  log << "accuracy on " << split << ": " << Num(accuracy) << " (" << data.size()
      << " samples, " << no_decision << " abstained)\n";
  WriteJson(run_dir / "eval.json", {{"split", split},
                                    {"samples", data.size()},
                                    {"accuracy", accuracy},
                                    {"no_decision", no_decision},
                                    {"epochs_completed", ckpt.epochs_completed}});
}

void CmdCost(const PipelineConfig& config, std::string_view split,
             const fs::path& run_dir, std::ostream& log) {
  const Network net = BuildNetwork(config);
  const std::vector<Sample> samples = LoadSplit(config, split);
  double raw_sum = 0.0, enc_sum = 0.0, ns_raw = 0.0, ns_enc = 0.0;
  for (const Sample& s : samples) {
    const EventStream encoded = EncodeStream(config.sste, s.stream);
    const SpikeStats st = ComputeSpikeStats(s.stream, encoded);
    raw_sum += static_cast<double>(st.raw_events);
    enc_sum += static_cast<double>(st.encoded_events);
    ns_raw += st.n_s_raw;
    ns_enc += st.n_s_encoded;
  }
  const double n = static_cast<double>(samples.size());
  const LayerSpec& first = net.layer(0).spec;
  const CostReport raw = ComputeCost(raw_sum / n, first);
  const CostReport enc = ComputeCost(enc_sum / n, first);
  const double ratio = raw.n_e > 0.0 ? enc.n_e / raw.n_e : 0.0;
  log << "N_e raw " << Num(raw.n_e) << ", encoded " << Num(enc.n_e) << " (ratio "
      << Num(ratio) << "), N_c " << raw.n_c << ", cost raw " << Num(raw.total)
      << ", encoded " << Num(enc.total) << "\n";
  auto report = [](const CostReport& c) {
    return json{{"n_e", c.n_e}, {"n_c", c.n_c}, {"total", c.total}};
  };
  WriteJson(run_dir / "cost.json", {{"split", split},
                                    {"samples", samples.size()},
                                    {"raw", report(raw)},
                                    {"encoded", report(enc)},
                                    {"ratio", ratio},
                                    {"n_s_raw", ns_raw / n},
                                    {"n_s_encoded", ns_enc / n}});
}

void CmdGenToy(const ToyOptions& options, const fs::path& root, std::ostream& log) {
  Require(options.num_classes >= 1 && options.num_classes <= kShapeClassCount,
          ErrorCode::kConfigError,
          "classes must be in [1, " + std::to_string(kShapeClassCount) + "]");
  Require(options.train_per_class >= 1 && options.test_per_class >= 0,
          ErrorCode::kConfigError, "per-class counts must be positive");
  const std::vector<Sample> train = SynthShapeDataset(
      options.num_classes, options.train_per_class, MixSeed(options.seed, 0));
  WriteSampleDirectory(root, "train", options.format, train);
  size_t test_size = 0;
  if (options.test_per_class > 0) {
    const std::vector<Sample> test = SynthShapeDataset(
        options.num_classes, options.test_per_class, MixSeed(options.seed, 1));
    WriteSampleDirectory(root, "test", options.format, test);
    test_size = test.size();
  }
  log << "wrote " << train.size() << " train and " << test_size
      << " test samples to " << root.string() << "\n";
}

}  // namespace aerspike::cli
