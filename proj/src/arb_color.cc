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

#include "streamcolor/arb_color.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "streamcolor/delta_color.h"

namespace streamcolor {
namespace {

// Vertices in decreasing (layer, id) order, by counting sort on layer.
std::vector<VertexId> reverse_key_order(const LayerPartition& lp, std::uint32_t n) {
  std::uint32_t k = 0;
  for (VertexId v = 0; v < n; ++v) k = std::max(k, lp.layer[v]);
  std::vector<std::uint32_t> start(k + 2, 0);
  for (VertexId v = 0; v < n; ++v) ++start[k - lp.layer[v] + 1];
  for (std::uint32_t i = 1; i < start.size(); ++i) start[i] += start[i - 1];
  std::vector<VertexId> order(n);
  for (VertexId v = n; v-- > 0;) order[start[k - lp.layer[v]]++] = v;
  return order;
}

// Slot per vertex; slot(v) <= out-degree(v).
std::vector<std::uint32_t> dag_slots(const StoredGraph& g, const LayerPartition& lp) {
  const std::uint32_t n = g.n();
  std::vector<std::uint32_t> slot(n, 0);
  std::vector<std::uint32_t> taken(g.max_degree() + 2, 0);
  std::uint32_t stamp = 0;
  for (VertexId v : reverse_key_order(lp, n)) {
    ++stamp;
    for (VertexId w : g.neighbors(v)) {
      if (key_less(v, w, lp)) taken[slot[w]] = stamp;
    }
    std::uint32_t pick = 0;
    while (taken[pick] == stamp) ++pick;
    slot[v] = pick;
  }
  return slot;
}

}  // namespace

ArbConfig make_arb_config(std::uint32_t n, std::uint32_t alpha, double epsilon,
                          double c, std::uint64_t seed) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (!(c > 0)) throw std::invalid_argument("c must be positive");
  ArbConfig cfg;
  cfg.n = n;
  cfg.alpha = alpha;
  cfg.epsilon = epsilon;
  cfg.c = c;
  cfg.seed = seed;
  cfg.eps_prime = epsilon / 6.0;
  cfg.gamma = epsilon / 3.0;
  const double x = (cfg.eps_prime / c) * ((2.0 + cfg.gamma) * alpha / log2_n(n));
  cfg.ell = static_cast<std::uint32_t>(std::max(1.0, std::ceil(x - 1e-9)));
  return cfg;
}

std::vector<std::uint32_t> out_degrees(const StoredGraph& g, const LayerPartition& lp) {
  std::vector<std::uint32_t> out(g.n(), 0);
  for (VertexId v = 0; v < g.n(); ++v) {
    for (VertexId w : g.neighbors(v)) {
      if (key_less(v, w, lp)) ++out[v];
    }
  }
  return out;
}

std::vector<std::uint32_t> compute_out_degrees(const StoredGraph& g,
                                               const LayerPartition& lp,
                                               std::span<const std::uint32_t> class_of,
                                               std::uint32_t ell) {
  std::vector<std::uint32_t> per_class(ell, 0);
  std::vector<std::uint32_t> deg = out_degrees(g, lp);
  for (VertexId v = 0; v < g.n(); ++v) {
    auto& best = per_class[class_of[v] - 1];
    best = std::max(best, deg[v]);
  }
  return per_class;
}

Coloring offline_dag_color(const StoredGraph& g, const LayerPartition& lp,
                           Palette palette) {
  std::vector<std::uint32_t> deg = out_degrees(g, lp);
  const std::uint32_t max_out = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  if (palette.size < max_out + 1) {
    throw std::logic_error("palette of " + std::to_string(palette.size) +
                           " colors is smaller than max out-degree + 1 = " +
                           std::to_string(max_out + 1));
  }
  std::vector<std::uint32_t> slot = dag_slots(g, lp);
  std::vector<ColorId> color(g.n());
  for (VertexId v = 0; v < g.n(); ++v) color[v] = palette.first + slot[v];
  return make_coloring(std::move(color), palette.size);
}

ArbResult run_algorithm3(EdgeStream& stream, std::uint32_t alpha, double epsilon,
                         double c, std::uint64_t seed) {
  const std::uint32_t n = stream.n();
  const ArbConfig cfg = make_arb_config(n, alpha, epsilon, c, seed);
  std::vector<std::uint32_t> class_of = assign_classes(n, cfg.ell, seed);

  StoredGraph mono(n);
  Peeler peeler(n, alpha, cfg.gamma);
  const std::uint64_t before = stream.pass_count();

  // Pass 1: store class-internal edges and run peel round 1 together.
  PassStats first = stream.run_pass(
      {[&](const Edge& e) {
         if (class_of[e.u] == class_of[e.v]) mono.add_edge(e);
       },
       peeler.sink()});
  peeler.finish_round();
  while (!peeler.done()) {
    stream.run_pass({peeler.sink()});
    peeler.finish_round();
  }

  ArbResult out;
  out.layers = peeler.take_partition();
  out.metrics.per_class_out_degree =
      compute_out_degrees(mono, out.layers, class_of, cfg.ell);

  // Class i takes the next (out-degree + 1) ids after classes 1..i-1.
  std::vector<ColorId> offset(cfg.ell, 0);
  std::uint64_t palette_total = 0;
  for (std::uint32_t i = 0; i < cfg.ell; ++i) {
    offset[i] = static_cast<ColorId>(palette_total);
    palette_total += out.metrics.per_class_out_degree[i] + 1;
  }
  std::vector<std::uint32_t> slot = dag_slots(mono, out.layers);
  std::vector<ColorId> color(n);
  for (VertexId v = 0; v < n; ++v) color[v] = offset[class_of[v] - 1] + slot[v];
  out.coloring = make_coloring(std::move(color), palette_total);

  ArbRunMetrics& m = out.metrics;
  m.n = n;
  m.m = first.edges_delivered;
  m.ell = cfg.ell;
  m.k = out.layers.k;
  m.passes = stream.pass_count() - before;
  m.colors_used = out.coloring.colors_used;
  m.peak_stored_edges = mono.peak_stored_edges();
  m.seed = seed;
  out.class_of = std::move(class_of);
  return out;
}

}  // namespace streamcolor
