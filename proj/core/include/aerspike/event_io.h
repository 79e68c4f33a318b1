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

#ifndef AERSPIKE_EVENT_IO_H_
#define AERSPIKE_EVENT_IO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aerspike/event.h"

namespace aerspike {

// N-MNIST binary records, 5 bytes each:
//   byte 0      x address
//   byte 1      y address
//   byte 2 b7   polarity (1 -> +1, 0 -> -1)
//   byte 2 b6-0 timestamp bits 22..16
//   byte 3      timestamp bits 15..8
//   byte 4      timestamp bits 7..0
// Timestamps are microseconds. Throws TruncatedRecord / OutOfBounds.
inline constexpr size_t kNmnistRecordBytes = 5;
inline constexpr uint64_t kNmnistMaxTimestamp = (uint64_t{1} << 23) - 1;

EventStream ReadNmnist(std::span<const uint8_t> bytes, Geometry geometry);

// Throws TimestampOverflow for t > 2^23 - 1 and OutOfBounds for addresses
// that do not fit in one byte. Labels are not representable and dropped.
std::vector<uint8_t> WriteNmnist(const EventStream& stream);

EventStream ReadNmnistFile(const std::filesystem::path& path,
                           Geometry geometry);
void WriteNmnistFile(const std::filesystem::path& path,
                     const EventStream& stream);

// CSV lines are `t_us,x,y,p[,label]` with p in {-1, 1} and label in
// {signal, noise} (empty or absent means unlabeled). A column-name header
// line is optional. WriteCsvEvents prepends a `# width=W height=H
// duration_us=D` comment so the stream round-trips exactly; when reading a
// file without it, geometry comes from `geometry` or is inferred from the
// largest addresses seen. Errors are ParseError with the 1-based line.
EventStream ReadCsvEvents(std::string_view text,
                          std::optional<Geometry> geometry = std::nullopt);
std::string WriteCsvEvents(const EventStream& stream);

EventStream ReadCsvEventsFile(const std::filesystem::path& path,
                              std::optional<Geometry> geometry = std::nullopt);
void WriteCsvEventsFile(const std::filesystem::path& path,
                        const EventStream& stream);

// Whole-file helpers; throw IoError with the path in the message.
std::vector<uint8_t> ReadBinaryFile(const std::filesystem::path& path);
std::string ReadTextFile(const std::filesystem::path& path);
void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view contents);

}  // namespace aerspike

#endif  // AERSPIKE_EVENT_IO_H_
