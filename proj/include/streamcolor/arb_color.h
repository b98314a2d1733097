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

#ifndef STREAMCOLOR_ARB_COLOR_H_
#define STREAMCOLOR_ARB_COLOR_H_

#include <cstdint>
#include <span>
#include <vector>

#include "streamcolor/coloring.h"
#include "streamcolor/edge_stream.h"
#include "streamcolor/peel.h"
#include "streamcolor/stored_graph.h"

namespace streamcolor {

// (2+eps)*alpha coloring for graphs of arboricity at most alpha.
//
// Vertices are split at random into ell classes and every edge inside a
// class is stored. In parallel the stream is peeled into layers, which
// orient each edge from smaller to larger (layer, id). Each stored class
// graph is then a DAG of small out-degree and gets colored offline with
// (max out-degree + 1) fresh colors.

struct ArbConfig {
  std::uint32_t n = 0;
  std::uint32_t alpha = 0;
  double epsilon = 0;
  double c = 0;
  std::uint64_t seed = 0;
  double eps_prime = 0;  // epsilon / 6
  double gamma = 0;      // epsilon / 3
  std::uint32_t ell = 1;
};

// Derives eps', gamma and ell = ceil((eps'/c) * (2+gamma) alpha / log2 n),
// at least 1. Throws std::invalid_argument unless eps > 0 and c > 0.
ArbConfig make_arb_config(std::uint32_t n, std::uint32_t alpha, double epsilon,
                          double c, std::uint64_t seed);

struct ArbRunMetrics {
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::uint32_t ell = 0;
  std::uint32_t k = 0;
  std::uint64_t passes = 0;
  std::uint64_t colors_used = 0;
  std::vector<std::uint32_t> per_class_out_degree;
  std::uint64_t peak_stored_edges = 0;
  bool stalled = false;
  std::uint64_t seed = 0;
};

struct ArbResult {
  Coloring coloring;
  ArbRunMetrics metrics;
  LayerPartition layers;
  std::vector<std::uint32_t> class_of;  // 1-based
};

// Pass 1 feeds both the class-edge collector and peel round 1; the remaining
// peel rounds take one pass each, so passes == k. Throws StallError when
// alpha is too small.
ArbResult run_algorithm3(EdgeStream& stream, std::uint32_t alpha, double epsilon,
                         double c, std::uint64_t seed);

// Out-degree of every vertex of `g` under the (layer, id) orientation.
std::vector<std::uint32_t> out_degrees(const StoredGraph& g, const LayerPartition& lp);

// Max out-degree per class; index i-1 for class i. No stream access.
std::vector<std::uint32_t> compute_out_degrees(const StoredGraph& g,
                                               const LayerPartition& lp,
                                               std::span<const std::uint32_t> class_of,
                                               std::uint32_t ell);

struct Palette {
  ColorId first = 0;
  std::uint32_t size = 0;
};

// Greedy in decreasing (layer, id) order: each vertex takes the smallest
// palette color not used by its out-neighbors, which are already colored.
// Needs palette.size >= max out-degree + 1; throws std::logic_error if not.
Coloring offline_dag_color(const StoredGraph& g, const LayerPartition& lp,
                           Palette palette);

}  // namespace streamcolor

#endif  // STREAMCOLOR_ARB_COLOR_H_
