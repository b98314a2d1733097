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

#ifndef STREAMCOLOR_EDGE_STREAM_H_
#define STREAMCOLOR_EDGE_STREAM_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "streamcolor/graph.h"

namespace streamcolor {

// Header information of a stream. `m` is the declared edge count when known.
struct StreamMeta {
  std::uint32_t n = 0;
  std::optional<std::uint64_t> m;
  std::optional<std::uint32_t> max_degree;
};

// A rewindable, ordered edge source. Each call to rewind() restarts the
// same sequence; next() returns false at the end of the sequence.
class EdgeSource {
 public:
  virtual ~EdgeSource() = default;
  virtual void rewind() = 0;
  virtual bool next(Edge& out) = 0;
};

// Per-pass consumer of edges.
using EdgeSink = std::function<void(const Edge&)>;

struct PassStats {
  std::uint64_t edges_delivered = 0;
};

// A multi-pass edge stream in the insert-only model. Every pass replays the
// source from the start and fans each edge out to all registered sinks in
// order. Nothing is cached between passes.
class EdgeStream {
 public:
  EdgeStream(StreamMeta meta, std::unique_ptr<EdgeSource> source);

  EdgeStream(EdgeStream&&) noexcept = default;
  EdgeStream& operator=(EdgeStream&&) noexcept = default;

  std::uint32_t n() const { return meta_.n; }
  const StreamMeta& meta() const { return meta_; }
  std::uint64_t pass_count() const { return pass_count_; }

  // One full traversal. Every sink sees every edge exactly once, in stream
  // order; sinks are invoked sequentially per edge.
  PassStats run_pass(std::span<const EdgeSink> sinks);
  PassStats run_pass(std::initializer_list<EdgeSink> sinks) {
    return run_pass(std::span<const EdgeSink>(sinks.begin(), sinks.size()));
  }

 private:
  StreamMeta meta_;
  std::unique_ptr<EdgeSource> source_;
  std::uint64_t pass_count_ = 0;
};

// Opens an edge-list file. The whole file is validated up front (header,
// endpoint range, self-loops, declared edge count); this scan is not
// counted as a pass. Later passes re-read the file.
EdgeStream open_stream(const std::filesystem::path& path);

// Parses edge-list text held in memory, with the same validation.
EdgeStream open_stream_text(const std::string& text);

// Wraps an in-memory edge list. Validates endpoints and self-loops.
EdgeStream open_stream(std::uint32_t n, std::vector<Edge> edges);

// One pass; returns the largest per-vertex edge count. Uses n counters.
// Duplicate stream edges are counted per arrival.
std::uint32_t measure_max_degree(EdgeStream& stream);

// 64-bit FNV-1a digest of one pass's edge sequence.
std::uint64_t stream_digest(EdgeStream& stream);

}  // namespace streamcolor

#endif  // STREAMCOLOR_EDGE_STREAM_H_
