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

#ifndef STREAMCOLOR_PEEL_H_
#define STREAMCOLOR_PEEL_H_

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "streamcolor/edge_stream.h"

namespace streamcolor {

// Multi-pass degree peeling. Round i removes every active vertex whose
// degree among active vertices is at most floor((2 + gamma) * alpha); the
// removed set is layer H_i. Ordering vertices by (layer, id) orients every
// edge acyclically with out-degree at most that threshold.

struct LayerPartition {
  std::uint32_t k = 0;                 // number of layers
  std::vector<std::uint32_t> layer;    // 1-based layer per vertex
  std::vector<std::uint32_t> witnessed_degree;  // active degree when removed
  std::uint32_t alpha = 0;
  double gamma = 0;
  std::uint32_t threshold = 0;
};

// floor((2 + gamma) * alpha), tolerant of rounding just below an integer.
std::uint32_t peel_threshold(std::uint32_t alpha, double gamma);

// ceil(log2 n / log2((2 + gamma) / 2)), at least 1: the round count reached
// when alpha really bounds the arboricity.
std::uint32_t peel_pass_bound(std::uint32_t n, double gamma);

// A round removed nothing while vertices remained active, which means alpha
// is below the arboricity of the remaining subgraph.
class StallError : public std::runtime_error {
 public:
  StallError(std::uint32_t round, std::uint32_t active,
             std::uint32_t min_active_degree, std::uint32_t threshold);

  std::uint32_t round() const { return round_; }
  std::uint32_t active() const { return active_; }
  std::uint32_t min_active_degree() const { return min_active_degree_; }
  std::uint32_t threshold() const { return threshold_; }

 private:
  std::uint32_t round_;
  std::uint32_t active_;
  std::uint32_t min_active_degree_;
  std::uint32_t threshold_;
};

// Round-by-round driver. Feed one full pass to consume(), then call
// finish_round(); repeat until done(). Lets a caller share a pass with other
// consumers.
class Peeler {
 public:
  // Throws std::invalid_argument unless gamma > 0.
  Peeler(std::uint32_t n, std::uint32_t alpha, double gamma);

  bool done() const { return active_.empty(); }
  std::uint32_t rounds() const { return partition_.k; }

  void consume(const Edge& e) {
    if (is_active_[e.u] && is_active_[e.v]) {
      ++degree_[e.u];
      ++degree_[e.v];
    }
  }
  EdgeSink sink() {
    return [this](const Edge& e) { consume(e); };
  }

  // Throws StallError.
  void finish_round();

  const LayerPartition& partition() const { return partition_; }
  LayerPartition take_partition() { return std::move(partition_); }

 private:
  LayerPartition partition_;
  std::vector<VertexId> active_;
  std::vector<char> is_active_;
  std::vector<std::uint32_t> degree_;
};

struct PeelResult {
  LayerPartition partition;
  std::uint64_t passes = 0;
};

// Runs rounds until every vertex is placed; one pass per round.
PeelResult peel(EdgeStream& stream, std::uint32_t alpha, double gamma);

// True when (layer[a], a) < (layer[b], b).
inline bool key_less(VertexId a, VertexId b, const LayerPartition& lp) {
  if (lp.layer[a] != lp.layer[b]) return lp.layer[a] < lp.layer[b];
  return a < b;
}

// (tail, head) with key(tail) < key(head). Independent of endpoint order.
inline std::pair<VertexId, VertexId> orient(const Edge& e, const LayerPartition& lp) {
  return key_less(e.u, e.v, lp) ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
}

// One pass: for each vertex, the number of neighbors in its own or a later
// layer. Returns the maximum.
std::uint32_t check_p1(EdgeStream& stream, const LayerPartition& lp);

}  // namespace streamcolor

#endif  // STREAMCOLOR_PEEL_H_
