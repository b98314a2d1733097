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

#include "streamcolor/delta_color.h"

#include <algorithm>
#include <optional>
#include <utility>

#include "streamcolor/rng.h"

namespace streamcolor {

std::uint32_t delta_class_count(std::uint32_t n, std::uint32_t delta,
                                double epsilon, double c) {
  const double x = epsilon * delta / (2.0 * c * log2_n(n));
  return static_cast<std::uint32_t>(std::max(1.0, std::ceil(x)));
}

std::uint32_t delta_palette_size(std::uint32_t n, double epsilon, double c) {
  return static_cast<std::uint32_t>(std::ceil((1.0 + 2.0 / epsilon) * c * log2_n(n))) + 1;
}

std::vector<std::uint32_t> assign_classes(std::uint32_t n, std::uint32_t ell,
                                          std::uint64_t seed) {
  Rng rng(derive_seed(seed, "phase1"));
  std::vector<std::uint32_t> class_of(n);
  for (auto& k : class_of) k = static_cast<std::uint32_t>(uniform_below(rng, ell)) + 1;
  return class_of;
}

PhasePartition build_phase1(std::uint32_t n, std::uint32_t delta, double epsilon,
                            double c, std::uint64_t seed) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (!(c > 0)) throw std::invalid_argument("c must be positive");
  PhasePartition p;
  p.n = n;
  p.ell = delta_class_count(n, delta, epsilon, c);
  p.r = delta_palette_size(n, epsilon, c);
  p.class_of = assign_classes(n, p.ell, seed);
  p.seed = seed;
  p.c = c;
  p.epsilon = epsilon;
  p.delta = delta;
  return p;
}

AbortError::AbortError(VertexId vertex, std::uint32_t class_id,
                       std::uint32_t class_degree, DeltaRunMetrics metrics)
    : std::runtime_error("palette exhausted at vertex " + std::to_string(vertex) +
                         " (class " + std::to_string(class_id) +
                         ", class degree " + std::to_string(class_degree) +
                         ", seed " + std::to_string(metrics.seed) + ")"),
      vertex_(vertex),
      class_id_(class_id),
      class_degree_(class_degree),
      metrics_(std::move(metrics)) {}

DeltaColorer::DeltaColorer(PhasePartition partition)
    : partition_(std::move(partition)),
      stored_(partition_.n),
      slot_(partition_.n, 1),
      taken_(partition_.r + 1, 0) {}

EdgeOutcome DeltaColorer::process_edge(const Edge& e) {
  last_cost_ = 0;
  const std::uint32_t cls = partition_.class_of[e.u];
  if (cls != partition_.class_of[e.v]) return EdgeOutcome::kDiscarded;
  stored_.add_edge(e);
  if (slot_[e.u] != slot_[e.v]) return EdgeOutcome::kStored;

  // Recolor u with the smallest slot unused by its stored neighbors.
  ++stamp_;
  std::uint64_t cost = 0;
  for (VertexId w : stored_.neighbors(e.u)) {
    taken_[slot_[w]] = stamp_;
    ++cost;
  }
  std::uint32_t pick = 0;
  for (std::uint32_t s = 1; s <= partition_.r; ++s) {
    ++cost;
    if (taken_[s] != stamp_) {
      pick = s;
      break;
    }
  }
  last_cost_ = cost;
  max_cost_ = std::max(max_cost_, cost);
  if (pick == 0) {
    throw AbortError(e.u, cls, stored_.degree(e.u), metrics());
  }
  slot_[e.u] = pick;
  return EdgeOutcome::kRecolored;
}

std::vector<std::uint32_t> DeltaColorer::class_max_degrees() const {
  std::vector<std::uint32_t> out(partition_.ell, 0);
  for (VertexId v = 0; v < partition_.n; ++v) {
    auto& slot = out[partition_.class_of[v] - 1];
    slot = std::max(slot, stored_.degree(v));
  }
  return out;
}

Coloring DeltaColorer::coloring() const {
  std::vector<ColorId> color(partition_.n);
  for (VertexId v = 0; v < partition_.n; ++v) {
    color[v] = partition_.global_color(partition_.class_of[v], slot_[v]);
  }
  return make_coloring(std::move(color),
                       static_cast<std::uint64_t>(partition_.ell) * partition_.r);
}

DeltaRunMetrics DeltaColorer::metrics() const {
  DeltaRunMetrics m;
  m.n = partition_.n;
  m.m = edges_seen_;
  m.ell = partition_.ell;
  m.r = partition_.r;
  m.colors_used = coloring().colors_used;
  m.peak_stored_edges = stored_.peak_stored_edges();
  m.class_max_degree = class_max_degrees();
  m.max_class_degree = m.class_max_degree.empty()
                           ? 0
                           : *std::max_element(m.class_max_degree.begin(),
                                               m.class_max_degree.end());
  m.max_edge_cost = max_cost_;
  m.seed = partition_.seed;
  return m;
}

DeltaResult run_algorithm1(EdgeStream& stream, std::uint32_t delta,
                           double epsilon, double c, std::uint64_t seed) {
  DeltaColorer colorer(build_phase1(stream.n(), delta, epsilon, c, seed));
  const std::uint64_t passes_before = stream.pass_count();
  std::optional<AbortError> abort;
  std::uint64_t seen = 0;
  stream.run_pass({[&](const Edge& e) {
    ++seen;
    if (abort) return;
    try {
      colorer.process_edge(e);
    } catch (const AbortError& err) {
      abort.emplace(err);
    }
  }});
  colorer.set_edges_seen(seen);
  DeltaRunMetrics metrics = colorer.metrics();
  metrics.passes = stream.pass_count() - passes_before;
  if (abort) {
    metrics.aborted = true;
    throw AbortError(abort->vertex(), abort->class_id(), abort->class_degree(),
                     std::move(metrics));
  }
  DeltaResult out{colorer.coloring(), std::move(metrics), colorer.partition()};
  return out;
}

}  // namespace streamcolor
