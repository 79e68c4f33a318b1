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

#include "aerspike/event_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>

#include "aerspike/error.h"

namespace aerspike {
namespace {

[[noreturn]] void ParseFail(size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + what);
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

template <typename T>
bool ParseNumber(std::string_view field, T* out) {
  field = Trim(field);
  if (field.empty()) return false;
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, *out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> SplitCommas(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

// Parses "# width=W height=H duration_us=D".
bool ParseMetaComment(std::string_view line, Geometry* geometry,
                      std::optional<uint64_t>* duration) {
  line.remove_prefix(1);
  std::istringstream in{std::string(line)};
  std::string token;
  bool have_w = false, have_h = false;
  while (in >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    std::string_view key(token.data(), eq);
    std::string_view value(token.data() + eq + 1, token.size() - eq - 1);
    uint64_t v = 0;
    if (!ParseNumber(value, &v)) return false;
    if (key == "width") {
      geometry->width = static_cast<uint32_t>(v);
      have_w = true;
    } else if (key == "height") {
      geometry->height = static_cast<uint32_t>(v);
      have_h = true;
    } else if (key == "duration_us") {
      *duration = v;
    }
  }
  return have_w && have_h;
}

}  // namespace

EventStream ReadNmnist(std::span<const uint8_t> bytes, Geometry geometry) {
  Require(bytes.size() % kNmnistRecordBytes == 0, ErrorCode::kTruncatedRecord,
          "byte count " + std::to_string(bytes.size()) +
              " is not a multiple of 5");
  std::vector<Event> events;
  events.reserve(bytes.size() / kNmnistRecordBytes);
  for (size_t i = 0; i < bytes.size(); i += kNmnistRecordBytes) {
    Event e;
    e.x = bytes[i];
    e.y = bytes[i + 1];
    e.p = (bytes[i + 2] & 0x80) ? 1 : -1;
    e.t = (uint64_t{bytes[i + 2] & 0x7Fu} << 16) |
          (uint64_t{bytes[i + 3]} << 8) | uint64_t{bytes[i + 4]};
    Require(geometry.contains(e.x, e.y), ErrorCode::kOutOfBounds,
            "record " + std::to_string(i / kNmnistRecordBytes) +
                " address (" + std::to_string(e.x) + "," +
                std::to_string(e.y) + ") outside sensor");
    events.push_back(e);
  }
  return EventStream(geometry, std::move(events));
}

std::vector<uint8_t> WriteNmnist(const EventStream& stream) {
  std::vector<uint8_t> bytes;
  bytes.reserve(stream.size() * kNmnistRecordBytes);
  for (const Event& e : stream.events()) {
    Require(e.t <= kNmnistMaxTimestamp, ErrorCode::kTimestampOverflow,
            "timestamp " + std::to_string(e.t) + " exceeds 23 bits");
    Require(e.x <= 0xFF && e.y <= 0xFF, ErrorCode::kOutOfBounds,
            "address does not fit in one byte");
    bytes.push_back(static_cast<uint8_t>(e.x));
    bytes.push_back(static_cast<uint8_t>(e.y));
    bytes.push_back(static_cast<uint8_t>((e.p > 0 ? 0x80 : 0x00) |
                                         ((e.t >> 16) & 0x7F)));
    bytes.push_back(static_cast<uint8_t>((e.t >> 8) & 0xFF));
    bytes.push_back(static_cast<uint8_t>(e.t & 0xFF));
  }
  return bytes;
}

EventStream ReadNmnistFile(const std::filesystem::path& path,
                           Geometry geometry) {
  std::vector<uint8_t> bytes = ReadBinaryFile(path);
  try {
    return ReadNmnist(bytes, geometry);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void WriteNmnistFile(const std::filesystem::path& path,
                     const EventStream& stream) {
  std::vector<uint8_t> bytes = WriteNmnist(stream);
  WriteFileAtomically(
      path, std::string_view(reinterpret_cast<const char*>(bytes.data()),
                             bytes.size()));
}

EventStream ReadCsvEvents(std::string_view text,
                          std::optional<Geometry> geometry) {
  std::vector<Event> events;
  std::optional<Geometry> meta_geometry;
  std::optional<uint64_t> duration;
  size_t line_no = 0;
  bool seen_data = false;
  while (!text.empty()) {
    ++line_no;
    size_t nl = text.find('\n');
    std::string_view line = Trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      Geometry g;
      if (ParseMetaComment(line, &g, &duration)) meta_geometry = g;
      continue;
    }
    std::vector<std::string_view> fields = SplitCommas(line);
    if (!seen_data && !fields.empty() && Trim(fields[0]) == "t_us") {
      seen_data = true;  // column-name header
      continue;
    }
    seen_data = true;
    if (fields.size() != 4 && fields.size() != 5) {
      ParseFail(line_no, "expected 4 or 5 fields, got " +
                             std::to_string(fields.size()));
    }
    Event e;
    uint32_t x = 0, y = 0;
    int p = 0;
    if (!ParseNumber(fields[0], &e.t)) ParseFail(line_no, "bad timestamp");
    if (!ParseNumber(fields[1], &x) || x > 0xFFFF) ParseFail(line_no, "bad x");
    if (!ParseNumber(fields[2], &y) || y > 0xFFFF) ParseFail(line_no, "bad y");
    if (!ParseNumber(fields[3], &p) || (p != 1 && p != -1)) {
      ParseFail(line_no, "polarity must be -1 or 1");
    }
    e.x = static_cast<uint16_t>(x);
    e.y = static_cast<uint16_t>(y);
    e.p = static_cast<int8_t>(p);
    if (fields.size() == 5) {
      std::string_view label = Trim(fields[4]);
      if (label == "signal") {
        e.label = EventLabel::kSignal;
      } else if (label == "noise") {
        e.label = EventLabel::kNoise;
      } else if (!label.empty()) {
        ParseFail(line_no, "unknown label '" + std::string(label) + "'");
      }
    }
    events.push_back(e);
  }

  Geometry g;
  if (geometry) {
    g = *geometry;
  } else if (meta_geometry) {
    g = *meta_geometry;
  } else {
    for (const Event& e : events) {
      g.width = std::max<uint32_t>(g.width, e.x + 1u);
      g.height = std::max<uint32_t>(g.height, e.y + 1u);
    }
  }
  if (duration) return EventStream(g, std::move(events), *duration);
  return EventStream(g, std::move(events));
}

std::string WriteCsvEvents(const EventStream& stream) {
  std::string out;
  out.reserve(32 + stream.size() * 24);
  out += "# width=" + std::to_string(stream.geometry().width) +
         " height=" + std::to_string(stream.geometry().height) +
         " duration_us=" + std::to_string(stream.duration_us()) + "\n";
  out += "t_us,x,y,p,label\n";
  for (const Event& e : stream.events()) {
    out += std::to_string(e.t);
    out += ',';
    out += std::to_string(e.x);
    out += ',';
    out += std::to_string(e.y);
    out += e.p > 0 ? ",1" : ",-1";
    switch (e.label) {
      case EventLabel::kSignal: out += ",signal"; break;
      case EventLabel::kNoise: out += ",noise"; break;
      case EventLabel::kNone: break;
    }
    out += '\n';
  }
  return out;
}

EventStream ReadCsvEventsFile(const std::filesystem::path& path,
                              std::optional<Geometry> geometry) {
  std::string text = ReadTextFile(path);
  try {
    return ReadCsvEvents(text, geometry);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void WriteCsvEventsFile(const std::filesystem::path& path,
                        const EventStream& stream) {
  WriteFileAtomically(path, WriteCsvEvents(stream));
}

std::vector<uint8_t> ReadBinaryFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  Require(in.good(), ErrorCode::kIoError, "cannot open " + path.string());
  return std::vector<uint8_t>(std::istreambuf_iterator<char>(in),
                              std::istreambuf_iterator<char>());
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  Require(in.good(), ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    Require(out.good(), ErrorCode::kIoError, "cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    Require(out.good(), ErrorCode::kIoError, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  Require(!ec, ErrorCode::kIoError,
          "cannot move " + tmp.string() + " to " + path.string() + ": " +
              ec.message());
}

}  // namespace aerspike
