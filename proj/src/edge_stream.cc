// Copyright 2026 The streamcolor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "streamcolor/edge_stream.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <utility>

namespace streamcolor {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

// Parses exactly two whitespace-separated unsigned decimals.
bool parse_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  line = trim(line);
  const char* p = line.data();
  const char* end = p + line.size();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc() || r1.ptr == end || !is_space(*r1.ptr)) return false;
  p = r1.ptr;
  while (p != end && is_space(*p)) ++p;
  auto r2 = std::from_chars(p, end, b);
  return r2.ec == std::errc() && r2.ptr == end;
}

Edge parse_edge_line(std::string_view line, std::size_t line_no,
                     std::uint32_t n) {
  std::uint64_t u = 0, v = 0;
  if (!parse_pair(line, u, v)) {
    throw FormatError(line_no, "malformed edge line '" + std::string(line) + "'");
  }
  if (u >= n || v >= n) {
    throw FormatError(line_no, "endpoint out of range (n=" + std::to_string(n) +
                                   "): " + std::to_string(u) + " " +
                                   std::to_string(v));
  }
  if (u == v) {
    throw FormatError(line_no, "self-loop on vertex " + std::to_string(u));
  }
  return Edge{static_cast<VertexId>(u), static_cast<VertexId>(v)};
}

// Reads the header from `in`, leaving the stream after it.
StreamMeta read_header(std::istream& in, std::size_t& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::uint64_t n = 0, m = 0;
    if (!parse_pair(line, n, m)) {
      throw FormatError(line_no, "malformed header, expected '<n> <m>'");
    }
    if (n > UINT32_MAX) throw FormatError(line_no, "vertex count too large");
    StreamMeta meta;
    meta.n = static_cast<std::uint32_t>(n);
    if (m != 0) meta.m = m;
    return meta;
  }
  throw FormatError(line_no, "missing header line");
}

// Validates the body and returns the number of edges seen.
std::uint64_t validate_body(std::istream& in, std::size_t line_no,
                            const StreamMeta& meta, std::vector<Edge>* keep) {
  std::string line;
  std::uint64_t count = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    Edge e = parse_edge_line(line, line_no, meta.n);
    if (keep) keep->push_back(e);
    ++count;
  }
  if (meta.m && *meta.m != count) {
    throw FormatError(0, "header declares " + std::to_string(*meta.m) +
                             " edges but " + std::to_string(count) +
                             " were found");
  }
  return count;
}

class MemorySource : public EdgeSource {
 public:
  explicit MemorySource(std::vector<Edge> edges) : edges_(std::move(edges)) {}
  void rewind() override { pos_ = 0; }
  bool next(Edge& out) override {
    if (pos_ == edges_.size()) return false;
    out = edges_[pos_++];
    return true;
  }

 private:
  std::vector<Edge> edges_;
  std::size_t pos_ = 0;
};

class FileSource : public EdgeSource {
 public:
  FileSource(std::filesystem::path path, std::uint32_t n)
      : path_(std::move(path)), n_(n) {}

  void rewind() override {
    in_ = std::ifstream(path_);
    if (!in_) throw std::runtime_error("cannot reopen " + path_.string());
    line_no_ = 0;
    read_header(in_, line_no_);
  }

  bool next(Edge& out) override {
    while (std::getline(in_, line_)) {
      ++line_no_;
      if (skippable(line_)) continue;
      out = parse_edge_line(line_, line_no_, n_);
      return true;
    }
    if (in_.bad()) throw std::runtime_error("read failure on " + path_.string());
    return false;
  }

 private:
  std::filesystem::path path_;
  std::uint32_t n_;
  std::ifstream in_;
  std::string line_;
  std::size_t line_no_ = 0;
};

}  // namespace

EdgeStream::EdgeStream(StreamMeta meta, std::unique_ptr<EdgeSource> source)
    : meta_(meta), source_(std::move(source)) {}

PassStats EdgeStream::run_pass(std::span<const EdgeSink> sinks) {
  PassStats stats;
  source_->rewind();
  Edge e;
  while (source_->next(e)) {
    for (const EdgeSink& sink : sinks) sink(e);
    ++stats.edges_delivered;
  }
  ++pass_count_;
  return stats;
}

EdgeStream open_stream(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::size_t line_no = 0;
  StreamMeta meta = read_header(in, line_no);
  std::uint64_t count = validate_body(in, line_no, meta, nullptr);
  meta.m = count;
  return EdgeStream(meta, std::make_unique<FileSource>(path, meta.n));
}

EdgeStream open_stream_text(const std::string& text) {
  std::istringstream in(text);
  std::size_t line_no = 0;
  StreamMeta meta = read_header(in, line_no);
  std::vector<Edge> edges;
  validate_body(in, line_no, meta, &edges);
  meta.m = edges.size();
  return EdgeStream(meta, std::make_unique<MemorySource>(std::move(edges)));
}

EdgeStream open_stream(std::uint32_t n, std::vector<Edge> edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u >= n || e.v >= n) {
      throw FormatError(0, "edge " + std::to_string(i) + " endpoint out of range");
    }
    if (e.u == e.v) {
      throw FormatError(0, "edge " + std::to_string(i) + " is a self-loop");
    }
  }
  StreamMeta meta;
  meta.n = n;
  meta.m = edges.size();
  return EdgeStream(meta, std::make_unique<MemorySource>(std::move(edges)));
}

std::uint32_t measure_max_degree(EdgeStream& stream) {
  std::vector<std::uint32_t> degree(stream.n(), 0);
  stream.run_pass({[&](const Edge& e) {
    ++degree[e.u];
    ++degree[e.v];
  }});
  return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

std::uint64_t stream_digest(EdgeStream& stream) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint32_t x) {
    for (int i = 0; i < 4; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  stream.run_pass({[&](const Edge& e) {
    mix(e.u);
    mix(e.v);
  }});
  return h;
}

}  // namespace streamcolor
