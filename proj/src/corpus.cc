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

#include "streamcolor/corpus.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "streamcolor/rng.h"

namespace streamcolor {
namespace {

std::uint64_t pair_count(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::vector<Edge> gnm_edges(std::uint32_t n, std::uint64_t m, Rng& rng) {
  const std::uint64_t total = pair_count(n);
  if (m > total) {
    throw std::invalid_argument("gnm: m exceeds n(n-1)/2");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  auto draw = [&](std::unordered_set<std::uint64_t>& seen, std::uint64_t want,
                  bool record) {
    while (seen.size() < want) {
      auto u = static_cast<VertexId>(uniform_below(rng, n));
      auto v = static_cast<VertexId>(uniform_below(rng, n));
      if (u == v) continue;
      if (seen.insert(edge_key(u, v)).second && record) {
        edges.push_back(Edge{u, v});
      }
    }
  };
  std::unordered_set<std::uint64_t> seen;
  if (m <= total / 2) {
    seen.reserve(m);
    draw(seen, m, true);
  } else {
    // Dense: sample the complement, emit the rest in lexicographic order.
    seen.reserve(total - m);
    draw(seen, total - m, false);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (!seen.count(edge_key(u, v))) edges.push_back(Edge{u, v});
      }
    }
  }
  return edges;
}

class UnionFind {
 public:
  explicit UnionFind(std::uint32_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  VertexId find(VertexId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> size_;
};

// Each forest is Kruskal over a uniformly shuffled complete edge set. Drawing
// i.i.d. vertex pairs and keeping the ones that join two components has the
// same distribution (a repeated pair always closes a cycle) without
// materializing all n(n-1)/2 pairs.
std::vector<Edge> forest_union_edges(std::uint32_t n, std::uint32_t alpha,
                                     Rng& rng) {
  if (alpha == 0) throw std::invalid_argument("forest-union: alpha must be >= 1");
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  if (n < 2) return edges;
  seen.reserve(static_cast<std::size_t>(alpha) * (n - 1));
  for (std::uint32_t f = 0; f < alpha; ++f) {
    UnionFind uf(n);
    std::uint32_t components = n;
    while (components > 1) {
      auto u = static_cast<VertexId>(uniform_below(rng, n));
      auto v = static_cast<VertexId>(uniform_below(rng, n));
      if (u == v || !uf.unite(u, v)) continue;
      --components;
      if (seen.insert(edge_key(u, v)).second) edges.push_back(Edge{u, v});
    }
  }
  return edges;
}

std::vector<Edge> petersen_edges() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.push_back(Edge{i, (i + 1) % 5});              // outer cycle
    edges.push_back(Edge{i, i + 5});                    // spoke
    edges.push_back(Edge{i + 5, (i + 2) % 5 + 5});      // inner pentagram
  }
  return edges;
}

std::uint32_t max_degree_of(std::uint32_t n, const std::vector<Edge>& edges) {
  std::vector<std::uint32_t> degree(n, 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

}  // namespace

GeneratedGraph generate(const GenSpec& spec) {
  Rng rng(derive_seed(spec.seed, "gen"));
  const std::uint32_t n = spec.family == Family::kPetersen ? 10 : spec.n;
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::kGnm:
      edges = gnm_edges(n, spec.m, rng);
      break;
    case Family::kForestUnion:
      edges = forest_union_edges(n, spec.alpha, rng);
      break;
    case Family::kComplete:
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
      break;
    case Family::kStar:
      if (n < 1) throw std::invalid_argument("star: n must be >= 1");
      for (VertexId v = 1; v < n; ++v) edges.push_back(Edge{0, v});
      break;
    case Family::kCycle:
      if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
      for (VertexId v = 0; v < n; ++v) edges.push_back(Edge{v, (v + 1) % n});
      break;
    case Family::kPath:
      for (VertexId v = 0; v + 1 < n; ++v) edges.push_back(Edge{v, v + 1});
      break;
    case Family::kPetersen:
      edges = petersen_edges();
      break;
  }
  GeneratedGraph out;
  out.meta.n = n;
  out.meta.m = edges.size();
  out.meta.max_degree = max_degree_of(n, edges);
  out.edges = shuffle_order(std::move(edges), spec.order,
                            derive_seed(spec.seed, "order"));
  return out;
}

std::vector<Edge> shuffle_order(std::vector<Edge> edges, Order order,
                                std::uint64_t seed) {
  switch (order) {
    case Order::kAsGenerated:
      break;
    case Order::kRandom: {
      Rng rng(seed);
      shuffle(std::span<Edge>(edges), rng);
      break;
    }
    case Order::kSortedByEndpoint:
      std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return edge_key(a) < edge_key(b);
      });
      break;
    case Order::kLayeredAdversarial: {
      VertexId top = 0;
      for (const Edge& e : edges) top = std::max({top, e.u, e.v});
      std::vector<std::uint32_t> degree(edges.empty() ? 0 : top + 1, 0);
      for (const Edge& e : edges) {
        ++degree[e.u];
        ++degree[e.v];
      }
      for (Edge& e : edges) {
        if (degree[e.v] > degree[e.u]) std::swap(e.u, e.v);
      }
      std::stable_sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
        std::uint32_t da = std::max(degree[a.u], degree[a.v]);
        std::uint32_t db = std::max(degree[b.u], degree[b.v]);
        if (da != db) return da < db;
        return edge_key(a) < edge_key(b);
      });
      break;
    }
  }
  return edges;
}

EdgeStream to_stream(const GeneratedGraph& g) {
  EdgeStream s = open_stream(g.meta.n, g.edges);
  return s;
}

Family parse_family(std::string_view name) {
  if (name == "gnm") return Family::kGnm;
  if (name == "forest-union") return Family::kForestUnion;
  if (name == "complete") return Family::kComplete;
  if (name == "star") return Family::kStar;
  if (name == "cycle") return Family::kCycle;
  if (name == "path") return Family::kPath;
  if (name == "petersen") return Family::kPetersen;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

Order parse_order(std::string_view name) {
  if (name == "as-generated") return Order::kAsGenerated;
  if (name == "random") return Order::kRandom;
  if (name == "sorted-by-endpoint") return Order::kSortedByEndpoint;
  if (name == "layered-adversarial") return Order::kLayeredAdversarial;
  throw std::invalid_argument("unknown order '" + std::string(name) + "'");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::kGnm: return "gnm";
    case Family::kForestUnion: return "forest-union";
    case Family::kComplete: return "complete";
    case Family::kStar: return "star";
    case Family::kCycle: return "cycle";
    case Family::kPath: return "path";
    case Family::kPetersen: return "petersen";
  }
  return "?";
}

std::string to_string(Order o) {
  switch (o) {
    case Order::kAsGenerated: return "as-generated";
    case Order::kRandom: return "random";
    case Order::kSortedByEndpoint: return "sorted-by-endpoint";
    case Order::kLayeredAdversarial: return "layered-adversarial";
  }
  return "?";
}

}  // namespace streamcolor
