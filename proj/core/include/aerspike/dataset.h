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

#ifndef AERSPIKE_DATASET_H_
#define AERSPIKE_DATASET_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aerspike/event.h"
#include "aerspike/sste.h"
#include "aerspike/train.h"

namespace aerspike {

enum class SampleFormat { kNmnist, kCsv };

SampleFormat ParseSampleFormat(std::string_view name);

// Samples are stored N-MNIST style: <root>/<split>/<class>/<name>.bin (or
// .csv), class directories named 0 .. num_classes - 1. Files load in
// lexicographic order within a class and classes are interleaved so that
// truncation with max_per_class keeps the set balanced. max_per_class <= 0
// loads everything. Throws IoError when a class directory is missing.
std::vector<Sample> LoadSampleDirectory(const std::filesystem::path& root,
                                        std::string_view split,
                                        SampleFormat format, Geometry geometry,
                                        int num_classes, int max_per_class = 0);

void WriteSampleDirectory(const std::filesystem::path& root,
                          std::string_view split, SampleFormat format,
                          std::span<const Sample> samples);

// Encodes the sample, normalizes the surviving spike times onto
// [0, t_max_norm] and keeps each pixel's first spike as z = exp(t). An
// encoder that passes nothing yields an all-silent map.
LabeledZMap PrepareInput(const Sample& sample, const SsteConfig& sste,
                         double t_max_norm);

}  // namespace aerspike

#endif  // AERSPIKE_DATASET_H_
