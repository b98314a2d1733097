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

#ifndef STREAMCOLOR_STORED_GRAPH_H_
#define STREAMCOLOR_STORED_GRAPH_H_

#include <cstdint>
#include <span>
#include <vector>

#include "streamcolor/edge_stream.h"
#include "streamcolor/graph.h"

namespace streamcolor {

// In-memory simple graph with stored-edge accounting. Duplicate insertions
// are no-ops. peak_stored_edges() is a high-water mark that survives clear().
class StoredGraph {
 public:
  explicit StoredGraph(std::uint32_t n = 0) : adjacency_(n) {}

  std::uint32_t n() const { return static_cast<std::uint32_t>(adjacency_.size()); }

  // Returns true when the edge was not already present. Throws
  // std::invalid_argument on a self-loop and std::out_of_range on a bad id.
  bool add_edge(const Edge& e);
  bool add_edge(VertexId u, VertexId v) { return add_edge(Edge{u, v}); }

  bool has_edge(VertexId u, VertexId v) const;

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(adjacency_[v].size());
  }
  std::uint32_t max_degree() const;

  std::uint64_t stored_edges() const { return stored_edges_; }
  std::uint64_t peak_stored_edges() const { return peak_stored_edges_; }

  // Drops every edge; the peak is kept.
  void clear();

  // Each stored edge once, as (min, max).
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::uint64_t stored_edges_ = 0;
  std::uint64_t peak_stored_edges_ = 0;
};

// One pass that stores every edge of the stream.
StoredGraph load_graph(EdgeStream& stream);

}  // namespace streamcolor

#endif  // STREAMCOLOR_STORED_GRAPH_H_
