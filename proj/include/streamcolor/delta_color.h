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

#ifndef STREAMCOLOR_DELTA_COLOR_H_
#define STREAMCOLOR_DELTA_COLOR_H_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "streamcolor/coloring.h"
#include "streamcolor/edge_stream.h"
#include "streamcolor/stored_graph.h"

namespace streamcolor {

// One-pass (1+eps)*Delta coloring. Vertices are split at random into ell
// classes before the stream starts; only edges inside a class are stored,
// and each class is colored online from its own palette of r colors.

// 66 / log2(e): the analysis constant with every log taken base 2.
inline constexpr double kDefaultC = 66.0 * 0.69314718055994530942;

// log2 n, clamped so that n < 2 behaves like n = 2.
inline double log2_n(std::uint32_t n) { return std::log2(n < 2 ? 2.0 : double(n)); }

// ceil(eps * delta / (2 c log2 n)), at least 1.
std::uint32_t delta_class_count(std::uint32_t n, std::uint32_t delta,
                                double epsilon, double c);
// ceil((1 + 2/eps) c log2 n) + 1.
std::uint32_t delta_palette_size(std::uint32_t n, double epsilon, double c);

// Each vertex gets a class in [1, ell], independently and uniformly, from
// derive_seed(seed, "phase1").
std::vector<std::uint32_t> assign_classes(std::uint32_t n, std::uint32_t ell,
                                          std::uint64_t seed);

struct PhasePartition {
  std::uint32_t n = 0;
  std::uint32_t ell = 1;
  std::uint32_t r = 1;  // palette size per class
  std::vector<std::uint32_t> class_of;  // 1-based class per vertex
  std::uint64_t seed = 0;
  double c = kDefaultC;
  double epsilon = 0;
  std::uint32_t delta = 0;

  // Class i owns the ids (i-1)*r + 1 .. i*r, so palettes never overlap.
  ColorId global_color(std::uint32_t class_id, std::uint32_t slot) const {
    return (class_id - 1) * r + slot;
  }
};

// Throws std::invalid_argument unless eps > 0 and c > 0.
PhasePartition build_phase1(std::uint32_t n, std::uint32_t delta, double epsilon,
                            double c, std::uint64_t seed);

struct DeltaRunMetrics {
  std::uint32_t n = 0;
  std::uint64_t m = 0;  // edges seen
  std::uint32_t ell = 0;
  std::uint32_t r = 0;
  std::uint64_t passes = 0;
  std::uint64_t colors_used = 0;
  std::uint64_t peak_stored_edges = 0;
  std::uint32_t max_class_degree = 0;
  std::vector<std::uint32_t> class_max_degree;  // index i-1 for class i
  std::uint64_t max_edge_cost = 0;
  bool aborted = false;
  std::uint64_t seed = 0;
};

// Palette exhaustion: `vertex` needed a new color but all r slots of its
// class were taken by stored neighbors.
class AbortError : public std::runtime_error {
 public:
  AbortError(VertexId vertex, std::uint32_t class_id, std::uint32_t class_degree,
             DeltaRunMetrics metrics);

  VertexId vertex() const { return vertex_; }
  std::uint32_t class_id() const { return class_id_; }
  std::uint32_t class_degree() const { return class_degree_; }
  const DeltaRunMetrics& metrics() const { return metrics_; }

 private:
  VertexId vertex_;
  std::uint32_t class_id_;
  std::uint32_t class_degree_;
  DeltaRunMetrics metrics_;
};

enum class EdgeOutcome { kDiscarded, kStored, kRecolored };

// Online state: the stored monochromatic edges (the disjoint union of the
// per-class graphs G_i, which never share a vertex) and each vertex's slot
// in [1, r]. Every stored G_i stays properly colored after each edge.
class DeltaColorer {
 public:
  explicit DeltaColorer(PhasePartition partition);

  // Throws AbortError when the first endpoint has no free slot.
  EdgeOutcome process_edge(const Edge& e);

  std::uint32_t slot(VertexId v) const { return slot_[v]; }
  const StoredGraph& stored() const { return stored_; }
  const PhasePartition& partition() const { return partition_; }

  // Neighbor reads plus slot probes spent by the most recent / worst edge.
  std::uint64_t last_edge_cost() const { return last_cost_; }
  std::uint64_t max_edge_cost() const { return max_cost_; }

  std::vector<std::uint32_t> class_max_degrees() const;
  Coloring coloring() const;
  DeltaRunMetrics metrics() const;

  void set_edges_seen(std::uint64_t m) { edges_seen_ = m; }

 private:
  PhasePartition partition_;
  StoredGraph stored_;
  std::vector<std::uint32_t> slot_;
  std::vector<std::uint32_t> taken_;  // taken_[s] == stamp_: slot s occupied
  std::uint32_t stamp_ = 0;
  std::uint64_t last_cost_ = 0;
  std::uint64_t max_cost_ = 0;
  std::uint64_t edges_seen_ = 0;
};

struct DeltaResult {
  Coloring coloring;
  DeltaRunMetrics metrics;
  PhasePartition partition;
};

// Exactly one pass. `delta` must be the max degree or an upper bound on it.
// On palette exhaustion the rest of the pass is ignored and AbortError is
// thrown afterwards, so the pass count stays exact.
DeltaResult run_algorithm1(EdgeStream& stream, std::uint32_t delta,
                           double epsilon, double c, std::uint64_t seed);

}  // namespace streamcolor

#endif  // STREAMCOLOR_DELTA_COLOR_H_
