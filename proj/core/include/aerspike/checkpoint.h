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

#ifndef AERSPIKE_CHECKPOINT_H_
#define AERSPIKE_CHECKPOINT_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "aerspike/network.h"

namespace aerspike {

// Text checkpoint, version 1. Whitespace-separated tokens, one record per
// line:
//
//   aerspike-checkpoint 1
//   epochs_completed <int>
//   input <channels> <height> <width>
//   layers <n>
//   conv <out_channels> <kernel> <stride>      (one line per layer, or)
//   dense <out_channels>
//   weights <layer index> <count>
//   <count values, %.17g, 8 per line>
//   ...                                        (one block per layer)
//   end
//
// Weights are stored at full double precision so a load reproduces the
// forward pass bit for bit.
inline constexpr int kCheckpointVersion = 1;

struct Checkpoint {
  Network network;
  int epochs_completed = 0;
};

std::string SerializeCheckpoint(const Network& net, int epochs_completed);
// Throws CheckpointError.
Checkpoint ParseCheckpoint(std::string_view text);

void SaveCheckpoint(const std::filesystem::path& path, const Network& net,
                    int epochs_completed);
Checkpoint LoadCheckpoint(const std::filesystem::path& path);

}  // namespace aerspike

#endif  // AERSPIKE_CHECKPOINT_H_
