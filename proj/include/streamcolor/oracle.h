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

#ifndef STREAMCOLOR_ORACLE_H_
#define STREAMCOLOR_ORACLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "streamcolor/coloring.h"
#include "streamcolor/edge_stream.h"
#include "streamcolor/stored_graph.h"

namespace streamcolor {

// Offline ground truth used to check the streaming algorithms.

// Edges whose endpoints share a color; empty iff the coloring is proper.
// Throws std::invalid_argument if a vertex is uncolored.
std::vector<Edge> verify_proper(const StoredGraph& g, const Coloring& c);
// Same, in a single pass over the stream (edges reported in stream order).
std::vector<Edge> verify_proper(EdgeStream& stream, const Coloring& c);

// First-fit coloring in the given order. Throws std::invalid_argument if
// `order` is not a permutation of the vertices.
Coloring greedy_color(const StoredGraph& g, std::span<const VertexId> order);

struct DegeneracyResult {
  std::uint32_t d = 0;
  std::vector<VertexId> order;  // removal order
};

// Min-degree peeling, ties broken by lowest vertex id.
DegeneracyResult degeneracy(const StoredGraph& g);

inline constexpr std::uint32_t kMaxBruteForceVertices = 20;

// max over |S| > 1 of ceil(|E(S)| / (|S| - 1)), by enumerating every vertex
// subset. Throws std::length_error for n > kMaxBruteForceVertices; use the
// degeneracy sandwich alpha <= d <= 2 alpha - 1 on bigger graphs.
std::uint32_t nash_williams_arboricity(const StoredGraph& g);

}  // namespace streamcolor

#endif  // STREAMCOLOR_ORACLE_H_
