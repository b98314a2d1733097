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

#include "streamcolor/peel.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace streamcolor {

std::uint32_t peel_threshold(std::uint32_t alpha, double gamma) {
  const long double product = (2.0L + gamma) * alpha;
  return static_cast<std::uint32_t>(std::floor(product + 1e-9L));
}

std::uint32_t peel_pass_bound(std::uint32_t n, double gamma) {
  if (n < 2) return 1;
  const double bound = std::ceil(std::log2(double(n)) / std::log2((2.0 + gamma) / 2.0));
  return static_cast<std::uint32_t>(std::max(1.0, bound));
}

StallError::StallError(std::uint32_t round, std::uint32_t active,
                       std::uint32_t min_active_degree, std::uint32_t threshold)
    : std::runtime_error("peeling stalled in round " + std::to_string(round) +
                         ": " + std::to_string(active) +
                         " active vertices, min active degree " +
                         std::to_string(min_active_degree) + " > threshold " +
                         std::to_string(threshold) +
                         " (alpha is below the arboricity)"),
      round_(round),
      active_(active),
      min_active_degree_(min_active_degree),
      threshold_(threshold) {}

Peeler::Peeler(std::uint32_t n, std::uint32_t alpha, double gamma)
    : active_(n), is_active_(n, 1), degree_(n, 0) {
  if (!(gamma > 0)) throw std::invalid_argument("gamma must be positive");
  for (VertexId v = 0; v < n; ++v) active_[v] = v;
  partition_.layer.assign(n, 0);
  partition_.witnessed_degree.assign(n, 0);
  partition_.alpha = alpha;
  partition_.gamma = gamma;
  partition_.threshold = peel_threshold(alpha, gamma);
}

void Peeler::finish_round() {
  const std::uint32_t round = partition_.k + 1;
  const std::uint32_t threshold = partition_.threshold;
  std::vector<VertexId> still_active;
  std::uint32_t min_degree = std::numeric_limits<std::uint32_t>::max();
  for (VertexId v : active_) {
    if (degree_[v] <= threshold) {
      partition_.layer[v] = round;
      partition_.witnessed_degree[v] = degree_[v];
      is_active_[v] = 0;
    } else {
      still_active.push_back(v);
      min_degree = std::min(min_degree, degree_[v]);
    }
  }
  if (!active_.empty() && still_active.size() == active_.size()) {
    // Nothing placed; leave the state as it was.
    for (VertexId v : active_) degree_[v] = 0;
    throw StallError(round, static_cast<std::uint32_t>(active_.size()), min_degree,
                     threshold);
  }
  for (VertexId v : active_) degree_[v] = 0;
  active_ = std::move(still_active);
  partition_.k = round;
}

PeelResult peel(EdgeStream& stream, std::uint32_t alpha, double gamma) {
  Peeler peeler(stream.n(), alpha, gamma);
  const std::uint64_t before = stream.pass_count();
  while (!peeler.done()) {
    stream.run_pass({peeler.sink()});
    peeler.finish_round();
  }
  return PeelResult{peeler.take_partition(), stream.pass_count() - before};
}

std::uint32_t check_p1(EdgeStream& stream, const LayerPartition& lp) {
  std::vector<std::uint32_t> forward(stream.n(), 0);
  stream.run_pass({[&](const Edge& e) {
    if (lp.layer[e.v] >= lp.layer[e.u]) ++forward[e.u];
    if (lp.layer[e.u] >= lp.layer[e.v]) ++forward[e.v];
  }});
  return forward.empty() ? 0 : *std::max_element(forward.begin(), forward.end());
}

}  // namespace streamcolor
