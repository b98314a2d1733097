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

#include "streamcolor/stored_graph.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace streamcolor {

bool StoredGraph::has_edge(VertexId u, VertexId v) const {
  if (u >= n() || v >= n()) return false;
  // Scan the shorter list.
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u]
                                                                : adjacency_[v];
  VertexId target = &a == &adjacency_[u] ? v : u;
  return std::find(a.begin(), a.end(), target) != a.end();
}

bool StoredGraph::add_edge(const Edge& e) {
  if (e.u >= n() || e.v >= n()) {
    throw std::out_of_range("edge endpoint out of range: " +
                            std::to_string(e.u) + " " + std::to_string(e.v));
  }
  if (e.u == e.v) {
    throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
  }
  if (has_edge(e.u, e.v)) return false;
  adjacency_[e.u].push_back(e.v);
  adjacency_[e.v].push_back(e.u);
  ++stored_edges_;
  peak_stored_edges_ = std::max(peak_stored_edges_, stored_edges_);
  return true;
}

std::uint32_t StoredGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return static_cast<std::uint32_t>(best);
}

void StoredGraph::clear() {
  for (auto& list : adjacency_) list.clear();
  stored_edges_ = 0;
}

std::vector<Edge> StoredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(stored_edges_);
  for (VertexId u = 0; u < n(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.push_back(Edge{u, v});
    }
  }
  return out;
}

StoredGraph load_graph(EdgeStream& stream) {
  StoredGraph g(stream.n());
  stream.run_pass({[&g](const Edge& e) { g.add_edge(e); }});
  return g;
}

}  // namespace streamcolor
