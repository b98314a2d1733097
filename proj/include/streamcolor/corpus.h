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

#ifndef STREAMCOLOR_CORPUS_H_
#define STREAMCOLOR_CORPUS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "streamcolor/edge_stream.h"
#include "streamcolor/graph.h"

namespace streamcolor {

enum class Family { kGnm, kForestUnion, kComplete, kStar, kCycle, kPath, kPetersen };

enum class Order { kAsGenerated, kRandom, kSortedByEndpoint, kLayeredAdversarial };

// Parameters of a generated graph. `m` is used by gnm only, `alpha` by
// forest-union only. For star, n counts the center (K_{1,n-1}). Petersen
// ignores n and always has 10 vertices.
struct GenSpec {
  Family family = Family::kGnm;
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::uint32_t alpha = 1;
  std::uint64_t seed = 0;
  Order order = Order::kAsGenerated;
};

struct GeneratedGraph {
  StreamMeta meta;  // n, m and the exact max degree
  std::vector<Edge> edges;
};

// Deterministic for a fixed spec. Output is simple. forest-union is the
// deduplicated union of `alpha` random spanning forests, so its arboricity
// is at most alpha. Throws std::invalid_argument on infeasible parameters.
GeneratedGraph generate(const GenSpec& spec);

// Reorders `edges` per `order`. kLayeredAdversarial delays the edges of
// high-degree vertices to the end and lists the higher-degree endpoint
// first, so hubs are the ones recolored late in the stream.
std::vector<Edge> shuffle_order(std::vector<Edge> edges, Order order,
                                std::uint64_t seed);

EdgeStream to_stream(const GeneratedGraph& g);

Family parse_family(std::string_view name);
Order parse_order(std::string_view name);
std::string to_string(Family f);
std::string to_string(Order o);

}  // namespace streamcolor

#endif  // STREAMCOLOR_CORPUS_H_
