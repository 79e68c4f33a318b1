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

#include "aerspike/cli/config.h"

#include <cmath>
#include <set>

#include "aerspike/error.h"
#include "aerspike/event_io.h"
#include "json.hpp"

namespace aerspike::cli {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& key, const std::string& what) {
  throw Error(ErrorCode::kConfigError, "config: " + key + ": " + what);
}

void RejectUnknown(const json& obj, const std::string& where,
                   std::initializer_list<std::string_view> known) {
  if (!obj.is_object()) Fail(where, "expected an object");
  const std::set<std::string_view> allowed(known);
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) Fail(where.empty() ? key : where + "." + key, "unknown key");
  }
}

// Reads obj[key] into out when present. Type mismatches become ConfigError.
template <typename T>
void Get(const json& obj, const std::string& where, const char* key, T& out) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  try {
    if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
      if (!it->is_number_integer()) Fail(where + "." + key, "expected an integer");
      if constexpr (std::is_unsigned_v<T>) {
        if (it->is_number_integer() && !it->is_number_unsigned() && it->get<int64_t>() < 0) {
          Fail(where + "." + key, "expected a non-negative integer");
        }
      }
    }
    out = it->get<T>();
  } catch (const json::exception& e) {
    Fail(where + "." + key, e.what());
  }
}

std::string SampleFormatName(SampleFormat f) {
  return f == SampleFormat::kNmnist ? "nmnist" : "csv";
}
std::string SignalPatternName(SignalPattern p) {
  return p == SignalPattern::kMovingBar ? "moving_bar" : "moving_blob";
}
std::string NoiseKindName(NoiseKind k) {
  return k == NoiseKind::kTypeI ? "type1" : "type2";
}

Geometry ParseGeometry(const json& obj, const std::string& where, Geometry fallback) {
  int w = fallback.width, h = fallback.height;
  Get(obj, where, "width", w);
  Get(obj, where, "height", h);
  if (w <= 0 || h <= 0 || w > 65535 || h > 65535) {
    Fail(where + ".width/height", "must be in [1, 65535]");
  }
  return Geometry{static_cast<uint32_t>(w), static_cast<uint32_t>(h)};
}

void ParseDataset(const json& obj, const std::filesystem::path& base,
                  DatasetSection& d) {
  const std::string w = "dataset";
  RejectUnknown(obj, w, {"root", "format", "width", "height", "num_classes",
                         "train_split", "test_split", "max_per_class",
                         "t_max_norm"});
  std::string root;
  Get(obj, w, "root", root);
  if (!root.empty()) {
    d.root = std::filesystem::path(root);
    if (d.root.is_relative()) d.root = (base / d.root).lexically_normal();
  }
  std::string format = SampleFormatName(d.format);
  Get(obj, w, "format", format);
  d.format = ParseSampleFormat(format);
  d.geometry = ParseGeometry(obj, w, d.geometry);
  Get(obj, w, "num_classes", d.num_classes);
  Get(obj, w, "train_split", d.train_split);
  Get(obj, w, "test_split", d.test_split);
  Get(obj, w, "max_per_class", d.max_per_class);
  Get(obj, w, "t_max_norm", d.t_max_norm);
}

void ParseSste(const json& obj, SsteConfig& s) {
  const std::string w = "sste";
  RejectUnknown(obj, w, {"tau_c_us", "beta", "theta", "w_neigh", "w_self",
                         "max_spikes_per_pixel"});
  Get(obj, w, "tau_c_us", s.tau_c_us);
  Get(obj, w, "beta", s.beta);
  Get(obj, w, "theta", s.theta);
  Get(obj, w, "w_neigh", s.w_neigh);
  Get(obj, w, "w_self", s.w_self);
  Get(obj, w, "max_spikes_per_pixel", s.max_spikes_per_pixel);
}

void ParseNetwork(const json& obj, NetworkSection& n) {
  const std::string w = "network";
  RejectUnknown(obj, w, {"layers", "init_weight_sums", "init_spread"});
  if (auto it = obj.find("layers"); it != obj.end()) {
    if (!it->is_array()) Fail("network.layers", "expected an array");
    n.layers.clear();
    for (size_t i = 0; i < it->size(); ++i) {
      const json& l = (*it)[i];
      const std::string lw = "network.layers[" + std::to_string(i) + "]";
      RejectUnknown(l, lw, {"type", "channels", "kernel", "stride"});
      std::string type;
      Get(l, lw, "type", type);
      LayerDef def;
      if (type == "conv") {
        def.kind = LayerKind::kConv;
      } else if (type == "dense") {
        def.kind = LayerKind::kDense;
      } else {
        Fail(lw + ".type", "expected \"conv\" or \"dense\", got \"" + type + "\"");
      }
      Get(l, lw, "channels", def.out_channels);
      Get(l, lw, "kernel", def.kernel);
      Get(l, lw, "stride", def.stride);
      n.layers.push_back(def);
    }
  }
  Get(obj, w, "init_weight_sums", n.init_weight_sums);
  Get(obj, w, "init_spread", n.init_spread);
}

void ParseTrain(const json& obj, TrainConfig& t) {
  const std::string w = "train";
  RejectUnknown(obj, w, {"epochs", "phase1_epochs", "lr_phase1", "lr_phase2",
                         "batch_size", "penalty_k", "threads",
                         "max_grad_norm"});
  Get(obj, w, "epochs", t.epochs_total);
  Get(obj, w, "phase1_epochs", t.phase1_epochs);
  Get(obj, w, "lr_phase1", t.lr_phase1);
  Get(obj, w, "lr_phase2", t.lr_phase2);
  Get(obj, w, "batch_size", t.batch_size);
  Get(obj, w, "penalty_k", t.penalty_k);
  Get(obj, w, "threads", t.num_threads);
  Get(obj, w, "max_grad_norm", t.max_grad_norm);
}

void ParseEval(const json& obj, EvalSection& e) {
  const std::string w = "eval";
  RejectUnknown(obj, w, {"thetas", "snrs", "signal_pattern", "noise_kinds",
                         "signal_rate", "duration_us", "width", "height"});
  Get(obj, w, "thetas", e.thetas);
  Get(obj, w, "snrs", e.snrs);
  std::string pattern = SignalPatternName(e.signal_pattern);
  Get(obj, w, "signal_pattern", pattern);
  e.signal_pattern = ParseSignalPattern(pattern);
  if (auto it = obj.find("noise_kinds"); it != obj.end()) {
    std::vector<std::string> names;
    Get(obj, w, "noise_kinds", names);
    e.noise_kinds.clear();
    for (const auto& name : names) e.noise_kinds.push_back(ParseNoiseKind(name));
  }
  Get(obj, w, "signal_rate", e.signal_rate);
  Get(obj, w, "duration_us", e.duration_us);
  e.geometry = ParseGeometry(obj, w, e.geometry);
}

}  // namespace

void PipelineConfig::Validate() const {
  try {
    sste.Validate();
    train.Validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfigError, std::string("config: ") + e.what());
  }
  Require(dataset.num_classes >= 1, ErrorCode::kConfigError,
          "config: dataset.num_classes must be >= 1");
  Require(dataset.max_per_class >= 0, ErrorCode::kConfigError,
          "config: dataset.max_per_class must be >= 0");
  Require(dataset.t_max_norm > 0.0 && std::isfinite(dataset.t_max_norm),
          ErrorCode::kConfigError, "config: dataset.t_max_norm must be > 0");

  if (!network.layers.empty()) {
    const InputShape input = InputShapeFor(dataset.geometry);
    Network net;
    try {
      net = Network::Build(input, network.layers);
    } catch (const Error& e) {
      throw Error(ErrorCode::kConfigError, std::string("config: network: ") + e.what());
    }
    Require(net.class_count() == dataset.num_classes, ErrorCode::kConfigError,
            "config: network output width " + std::to_string(net.class_count()) +
                " != dataset.num_classes " + std::to_string(dataset.num_classes));
    Require(network.init_weight_sums.size() == 1 ||
                network.init_weight_sums.size() == network.layers.size(),
            ErrorCode::kConfigError,
            "config: network.init_weight_sums needs 1 or one-per-layer values");
  }
  for (double s : network.init_weight_sums) {
    Require(std::isfinite(s), ErrorCode::kConfigError,
            "config: network.init_weight_sums must be finite");
  }
  Require(network.init_spread >= 0.0 && std::isfinite(network.init_spread),
          ErrorCode::kConfigError, "config: network.init_spread must be >= 0");

  Require(!eval.thetas.empty(), ErrorCode::kConfigError, "config: eval.thetas is empty");
  for (size_t i = 0; i < eval.thetas.size(); ++i) {
    Require(std::isfinite(eval.thetas[i]), ErrorCode::kConfigError,
            "config: eval.thetas must be finite");
    Require(i == 0 || eval.thetas[i] > eval.thetas[i - 1], ErrorCode::kConfigError,
            "config: eval.thetas must be strictly ascending");
  }
  Require(!eval.snrs.empty(), ErrorCode::kConfigError, "config: eval.snrs is empty");
  for (double snr : eval.snrs) {
    Require(snr > 0.0 && snr <= 1.0, ErrorCode::kConfigError,
            "config: eval.snrs must lie in (0, 1]");
  }
  Require(!eval.noise_kinds.empty(), ErrorCode::kConfigError,
          "config: eval.noise_kinds is empty");
  Require(eval.signal_rate > 0.0 && std::isfinite(eval.signal_rate),
          ErrorCode::kConfigError, "config: eval.signal_rate must be > 0");
  Require(eval.duration_us >= eval.geometry.width, ErrorCode::kConfigError,
          "config: eval.duration_us must be >= eval.width");
}

void PipelineConfig::CheckPaths() const {
  if (dataset.root.empty()) return;
  Require(std::filesystem::is_directory(dataset.root), ErrorCode::kIoError,
          "dataset root not found: " + dataset.root.string());
}

PipelineConfig ParseConfig(std::string_view json_text,
                           const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kConfigError, std::string("config: ") + e.what());
  }
  RejectUnknown(root, "", {"seed", "dataset", "sste", "network", "train", "eval"});
  PipelineConfig config;
  Get(root, "config", "seed", config.seed);
  if (root.contains("dataset")) ParseDataset(root["dataset"], base_dir, config.dataset);
  if (root.contains("sste")) ParseSste(root["sste"], config.sste);
  if (root.contains("network")) ParseNetwork(root["network"], config.network);
  if (root.contains("train")) ParseTrain(root["train"], config.train);
  if (root.contains("eval")) ParseEval(root["eval"], config.eval);
  config.Validate();
  return config;
}

PipelineConfig LoadConfig(const std::filesystem::path& path) {
  const std::string text = ReadTextFile(path);
  return ParseConfig(text, path.parent_path());
}

std::string ConfigToJson(const PipelineConfig& c) {
  json j;
  j["seed"] = c.seed;
  j["dataset"] = {{"root", c.dataset.root.string()},
                  {"format", SampleFormatName(c.dataset.format)},
                  {"width", c.dataset.geometry.width},
                  {"height", c.dataset.geometry.height},
                  {"num_classes", c.dataset.num_classes},
                  {"train_split", c.dataset.train_split},
                  {"test_split", c.dataset.test_split},
                  {"max_per_class", c.dataset.max_per_class},
                  {"t_max_norm", c.dataset.t_max_norm}};
  j["sste"] = {{"tau_c_us", c.sste.tau_c_us},
               {"beta", c.sste.beta},
               {"theta", c.sste.theta},
               {"w_neigh", c.sste.w_neigh},
               {"w_self", c.sste.w_self},
               {"max_spikes_per_pixel", c.sste.max_spikes_per_pixel}};
  json layers = json::array();
  for (const LayerDef& l : c.network.layers) {
    if (l.kind == LayerKind::kConv) {
      layers.push_back({{"type", "conv"},
                        {"channels", l.out_channels},
                        {"kernel", l.kernel},
                        {"stride", l.stride}});
    } else {
      layers.push_back({{"type", "dense"}, {"channels", l.out_channels}});
    }
  }
  j["network"] = {{"layers", layers},
                  {"init_weight_sums", c.network.init_weight_sums},
                  {"init_spread", c.network.init_spread}};
  j["train"] = {{"epochs", c.train.epochs_total},
                {"phase1_epochs", c.train.phase1_epochs},
                {"lr_phase1", c.train.lr_phase1},
                {"lr_phase2", c.train.lr_phase2},
                {"batch_size", c.train.batch_size},
                {"penalty_k", c.train.penalty_k},
                {"threads", c.train.num_threads},
                {"max_grad_norm", c.train.max_grad_norm}};
  std::vector<std::string> kinds;
  for (NoiseKind k : c.eval.noise_kinds) kinds.push_back(NoiseKindName(k));
  j["eval"] = {{"thetas", c.eval.thetas},
               {"snrs", c.eval.snrs},
               {"signal_pattern", SignalPatternName(c.eval.signal_pattern)},
               {"noise_kinds", kinds},
               {"signal_rate", c.eval.signal_rate},
               {"duration_us", c.eval.duration_us},
               {"width", c.eval.geometry.width},
               {"height", c.eval.geometry.height}};
  return j.dump(2) + "\n";
}

}  // namespace aerspike::cli
