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

#include "aerspike/checkpoint.h"

#include <cstdio>
#include <sstream>
#include <vector>

#include "aerspike/error.h"
#include "aerspike/event_io.h"

namespace aerspike {
namespace {

void Expect(bool ok, const std::string& what) {
  Require(ok, ErrorCode::kCheckpointError, what);
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string SerializeCheckpoint(const Network& net, int epochs_completed) {
  std::string out = "aerspike-checkpoint " + std::to_string(kCheckpointVersion) + "\n";
  out += "epochs_completed " + std::to_string(epochs_completed) + "\n";
  const InputShape in = net.input_shape();
  out += "input " + std::to_string(in.channels) + " " + std::to_string(in.height) +
         " " + std::to_string(in.width) + "\n";
  out += "layers " + std::to_string(net.layer_count()) + "\n";
  for (const Layer& l : net.layers()) {
    if (l.spec.kind == LayerKind::kConv) {
      out += "conv " + std::to_string(l.spec.out_channels) + " " +
             std::to_string(l.spec.kernel) + " " + std::to_string(l.spec.stride) +
             "\n";
    } else {
      out += "dense " + std::to_string(l.spec.out_channels) + "\n";
    }
  }
  for (size_t i = 0; i < net.layer_count(); ++i) {
    const std::vector<double>& w = net.layer(i).weights;
    out += "weights " + std::to_string(i) + " " + std::to_string(w.size()) + "\n";
    for (size_t j = 0; j < w.size(); ++j) {
      out += FormatDouble(w[j]);
      out += (j % 8 == 7 || j + 1 == w.size()) ? '\n' : ' ';
    }
  }
  out += "end\n";
  return out;
}

Checkpoint ParseCheckpoint(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag;
  int version = 0;
  Expect(static_cast<bool>(in >> tag >> version) && tag == "aerspike-checkpoint",
         "missing checkpoint header");
  Expect(version == kCheckpointVersion,
         "unsupported checkpoint version " + std::to_string(version));

  Checkpoint cp;
  Expect(static_cast<bool>(in >> tag >> cp.epochs_completed) &&
             tag == "epochs_completed" && cp.epochs_completed >= 0,
         "bad epochs_completed record");
  InputShape shape;
  Expect(static_cast<bool>(in >> tag >> shape.channels >> shape.height >>
                           shape.width) &&
             tag == "input",
         "bad input record");
  size_t n_layers = 0;
  Expect(static_cast<bool>(in >> tag >> n_layers) && tag == "layers" &&
             n_layers > 0,
         "bad layers record");
  std::vector<LayerDef> defs(n_layers);
  for (LayerDef& d : defs) {
    Expect(static_cast<bool>(in >> tag), "truncated layer list");
    if (tag == "conv") {
      d.kind = LayerKind::kConv;
      Expect(static_cast<bool>(in >> d.out_channels >> d.kernel >> d.stride),
             "bad conv record");
    } else if (tag == "dense") {
      d.kind = LayerKind::kDense;
      Expect(static_cast<bool>(in >> d.out_channels), "bad dense record");
    } else {
      Expect(false, "unknown layer kind '" + tag + "'");
    }
  }
  try {
    cp.network = Network::Build(shape, defs);
  } catch (const Error& e) {
    throw Error(ErrorCode::kCheckpointError, e.what());
  }
  for (size_t i = 0; i < n_layers; ++i) {
    size_t index = 0, count = 0;
    Expect(static_cast<bool>(in >> tag >> index >> count) && tag == "weights" &&
               index == i,
           "bad weights record for layer " + std::to_string(i));
    std::vector<double>& w = cp.network.layer(i).weights;
    Expect(count == w.size(), "layer " + std::to_string(i) + " has " +
                                  std::to_string(count) + " weights, expected " +
                                  std::to_string(w.size()));
    for (double& v : w) {
      // operator>> rejects "inf"/"nan", which is what we want here.
      Expect(static_cast<bool>(in >> v), "truncated weights for layer " +
                                             std::to_string(i));
    }
  }
  Expect(static_cast<bool>(in >> tag) && tag == "end", "missing end marker");
  Expect(!(in >> tag), "trailing data after end marker");
  return cp;
}

void SaveCheckpoint(const std::filesystem::path& path, const Network& net,
                    int epochs_completed) {
  WriteFileAtomically(path, SerializeCheckpoint(net, epochs_completed));
}

Checkpoint LoadCheckpoint(const std::filesystem::path& path) {
  const std::string text = ReadTextFile(path);
  try {
    return ParseCheckpoint(text);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace aerspike
