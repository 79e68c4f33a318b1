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

#include "aerspike/dataset.h"

#include <algorithm>
#include <cstdio>
#include <string>

#include "aerspike/error.h"
#include "aerspike/event_io.h"
#include "aerspike/ztime.h"

namespace aerspike {
namespace fs = std::filesystem;

SampleFormat ParseSampleFormat(std::string_view name) {
  if (name == "nmnist") return SampleFormat::kNmnist;
  if (name == "csv") return SampleFormat::kCsv;
  throw Error(ErrorCode::kConfigError,
              "unknown sample format '" + std::string(name) + "'");
}

std::vector<Sample> LoadSampleDirectory(const fs::path& root,
                                        std::string_view split,
                                        SampleFormat format, Geometry geometry,
                                        int num_classes, int max_per_class) {
  Require(num_classes >= 1, ErrorCode::kInvalidArgument, "num_classes must be >= 1");
  const std::string ext = format == SampleFormat::kNmnist ? ".bin" : ".csv";
  std::vector<std::vector<fs::path>> files(num_classes);
  for (int c = 0; c < num_classes; ++c) {
    const fs::path dir = root / std::string(split) / std::to_string(c);
    Require(fs::is_directory(dir), ErrorCode::kIoError,
            "missing class directory " + dir.string());
    for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ext) {
        files[c].push_back(entry.path());
      }
    }
    std::sort(files[c].begin(), files[c].end());
    if (max_per_class > 0 && files[c].size() > static_cast<size_t>(max_per_class)) {
      files[c].resize(max_per_class);
    }
  }
  std::vector<Sample> samples;
  size_t longest = 0;
  for (const auto& f : files) longest = std::max(longest, f.size());
  for (size_t i = 0; i < longest; ++i) {
    for (int c = 0; c < num_classes; ++c) {
      if (i >= files[c].size()) continue;
      const fs::path& path = files[c][i];
      EventStream stream = format == SampleFormat::kNmnist
                               ? ReadNmnistFile(path, geometry)
                               : ReadCsvEventsFile(path, geometry);
      samples.push_back({std::move(stream), c});
    }
  }
  return samples;
}

void WriteSampleDirectory(const fs::path& root, std::string_view split,
                          SampleFormat format, std::span<const Sample> samples) {
  std::vector<int> next_index;
  for (const Sample& s : samples) {
    if (static_cast<size_t>(s.class_label) >= next_index.size()) {
      next_index.resize(s.class_label + 1, 0);
    }
    const fs::path dir = root / std::string(split) / std::to_string(s.class_label);
    std::error_code ec;
    fs::create_directories(dir, ec);
    Require(!ec, ErrorCode::kIoError, "cannot create " + dir.string());
    char name[32];
    std::snprintf(name, sizeof(name), "%05d", next_index[s.class_label]++);
    if (format == SampleFormat::kNmnist) {
      WriteNmnistFile(dir / (std::string(name) + ".bin"), s.stream);
    } else {
      WriteCsvEventsFile(dir / (std::string(name) + ".csv"), s.stream);
    }
  }
}

LabeledZMap PrepareInput(const Sample& sample, const SsteConfig& sste,
                         double t_max_norm) {
  const EventStream encoded = EncodeStream(sste, sample.stream);
  const Geometry g = sample.stream.geometry();
  if (encoded.empty()) {
    return {ZMap(1, static_cast<int>(g.height), static_cast<int>(g.width)),
            sample.class_label};
  }
  return {FirstSpikeZMap(NormalizeTimestamps(encoded, t_max_norm)),
          sample.class_label};
}

}  // namespace aerspike
