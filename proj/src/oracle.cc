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

#include "streamcolor/oracle.h"

#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

namespace streamcolor {
namespace {

void require_total(const Coloring& c, std::uint32_t n) {
  if (c.color.size() < n) {
    throw std::invalid_argument("coloring covers " + std::to_string(c.color.size()) +
                                " of " + std::to_string(n) + " vertices");
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    if (c.color[v] == kNoColor) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " is uncolored");
    }
  }
}

}  // namespace

std::vector<Edge> verify_proper(const StoredGraph& g, const Coloring& c) {
  require_total(c, g.n());
  std::vector<Edge> bad;
  for (VertexId u = 0; u < g.n(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (u < v && c.color[u] == c.color[v]) bad.push_back(Edge{u, v});
    }
  }
  return bad;
}

std::vector<Edge> verify_proper(EdgeStream& stream, const Coloring& c) {
  require_total(c, stream.n());
  std::vector<Edge> bad;
  stream.run_pass({[&](const Edge& e) {
    if (c.color[e.u] == c.color[e.v]) bad.push_back(e);
  }});
  return bad;
}

Coloring greedy_color(const StoredGraph& g, std::span<const VertexId> order) {
  const std::uint32_t n = g.n();
  if (order.size() != n) {
    throw std::invalid_argument("order is not a permutation: wrong length");
  }
  std::vector<ColorId> color(n, kNoColor);
  std::vector<char> placed(n, 0);
  // mark[c] == stamp when color c is taken by a neighbor of the current vertex.
  std::vector<std::uint32_t> mark(g.max_degree() + 2, 0);
  std::uint32_t stamp = 0;
  for (VertexId v : order) {
    if (v >= n || placed[v]) {
      throw std::invalid_argument("order is not a permutation: vertex " +
                                  std::to_string(v));
    }
    placed[v] = 1;
    ++stamp;
    for (VertexId w : g.neighbors(v)) {
      if (color[w] != kNoColor && color[w] < mark.size()) mark[color[w]] = stamp;
    }
    ColorId pick = 0;
    while (mark[pick] == stamp) ++pick;
    color[v] = pick;
  }
  return make_coloring(std::move(color), g.max_degree() + 1);
}

DegeneracyResult degeneracy(const StoredGraph& g) {
  const std::uint32_t n = g.n();
  std::vector<std::uint32_t> degree(n);
  using Entry = std::pair<std::uint32_t, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    heap.emplace(degree[v], v);
  }
  std::vector<char> removed(n, 0);
  DegeneracyResult out;
  out.order.reserve(n);
  while (!heap.empty()) {
    auto [deg, v] = heap.top();
    heap.pop();
    if (removed[v] || deg != degree[v]) continue;  // stale entry
    removed[v] = 1;
    out.order.push_back(v);
    out.d = std::max(out.d, deg);
    for (VertexId w : g.neighbors(v)) {
      if (!removed[w]) heap.emplace(--degree[w], w);
    }
  }
  return out;
}

std::uint32_t nash_williams_arboricity(const StoredGraph& g) {
  const std::uint32_t n = g.n();
  if (n > kMaxBruteForceVertices) {
    throw std::length_error("brute-force arboricity limited to n <= " +
                            std::to_string(kMaxBruteForceVertices) + " (got n=" +
                            std::to_string(n) +
                            "); use the degeneracy bounds instead");
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) adj[u] |= 1u << v;
  }
  // induced[S] = |E(S)|, built from S without its lowest vertex.
  const std::uint32_t subsets = 1u << n;
  std::vector<std::uint32_t> induced(subsets, 0);
  std::uint32_t best = 0;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    const int low = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    induced[s] = induced[rest] + std::popcount(adj[low] & rest);
    const int size = std::popcount(s);
    if (size > 1) {
      const std::uint32_t denom = static_cast<std::uint32_t>(size - 1);
      best = std::max(best, (induced[s] + denom - 1) / denom);
    }
  }
  return best;
}

}  // namespace streamcolor
