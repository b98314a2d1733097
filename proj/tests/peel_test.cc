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

#include <algorithm>

#include "doctest.h"
#include "streamcolor/peel.h"
#include "test_support.h"

namespace sc = streamcolor;
namespace st = streamcolor::testing;
using sc::Edge;
using sc::Family;

namespace {

sc::LayerPartition layers(std::vector<std::uint32_t> layer) {
  sc::LayerPartition lp;
  lp.layer = std::move(layer);
  lp.k = lp.layer.empty() ? 0 : *std::max_element(lp.layer.begin(), lp.layer.end());
  return lp;
}

}  // namespace

TEST_CASE("threshold uses exact floor of (2+gamma)*alpha") {
  CHECK(sc::peel_threshold(8, 0.5) == 20);
  CHECK(sc::peel_threshold(1, 1.0) == 3);
  CHECK(sc::peel_threshold(64, 0.5 / 3) == 138);  // 138.67
  CHECK(sc::peel_threshold(10, 0.1) == 21);       // 2.1 is inexact in binary
  CHECK(sc::peel_threshold(3, 0.1) == 6);         // 6.3
  CHECK(sc::peel_threshold(0, 1.0) == 0);
}

TEST_CASE("pass bound") {
  // log2(1024) / log2(1.5) = 17.09
  CHECK(sc::peel_pass_bound(1024, 1.0) == 18);
  CHECK(sc::peel_pass_bound(1, 1.0) == 1);
}

TEST_CASE("star peels leaves first, then the center") {
  sc::EdgeStream s = sc::open_stream(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  auto res = sc::peel(s, 1, 1.0);
  CHECK(res.partition.k == 2);
  CHECK(res.passes == 2);
  CHECK(res.partition.layer == std::vector<std::uint32_t>{2, 1, 1, 1, 1, 1});
  CHECK(res.partition.witnessed_degree[0] == 0);
  CHECK(res.partition.witnessed_degree[1] == 1);
}

TEST_CASE("low max degree gives a single layer") {
  auto pet = st::gen(Family::kPetersen, 10);
  sc::EdgeStream s = sc::to_stream(pet);
  auto res = sc::peel(s, 1, 1.0);  // Delta = 3 <= 3
  CHECK(res.partition.k == 1);
  CHECK(res.passes == 1);
}

TEST_CASE("alpha below the arboricity stalls") {
  auto c5 = st::gen(Family::kCycle, 5);
  sc::EdgeStream s = sc::to_stream(c5);
  try {
    sc::peel(s, 0, 1.0);
    FAIL("expected stall");
  } catch (const sc::StallError& err) {
    CHECK(err.round() == 1);
    CHECK(err.active() == 5);
    CHECK(err.min_active_degree() == 2);
    CHECK(err.threshold() == 0);
  }
  CHECK_THROWS_AS(sc::Peeler(3, 1, 0.0), std::invalid_argument);
}

TEST_CASE("orient") {
  auto lp = layers({1, 2, 1, 1, 1, 1, 1, 1});
  CHECK(sc::orient({0, 1}, lp) == std::pair<sc::VertexId, sc::VertexId>{0, 1});
  CHECK(sc::orient({1, 0}, lp) == std::pair<sc::VertexId, sc::VertexId>{0, 1});
  // Cross-layer: lower layer is the tail even with a larger id.
  CHECK(sc::orient({1, 7}, lp) == std::pair<sc::VertexId, sc::VertexId>{7, 1});
  CHECK(sc::orient({7, 3}, lp) == std::pair<sc::VertexId, sc::VertexId>{3, 7});
  CHECK(sc::orient({3, 7}, lp) == sc::orient({7, 3}, lp));
}

TEST_CASE("check_p1") {
  sc::EdgeStream one = sc::open_stream(2, {{0, 1}});
  CHECK(sc::check_p1(one, layers({1, 1})) == 1);
  sc::EdgeStream none = sc::open_stream(4, {});
  CHECK(sc::check_p1(none, layers({1, 1, 1, 1})) == 0);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = st::gen(Family::kForestUnion, 400, seed, 0, 1, sc::Order::kRandom);
    sc::EdgeStream s = sc::to_stream(g);
    auto res = sc::peel(s, 1, 1.0);
    CHECK(sc::check_p1(s, res.partition) <= 3);
  }
}

TEST_CASE("peeling properties on certified instances") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::uint32_t alpha = 1 + seed % 6;
    const double gamma = seed % 2 ? 0.5 : 0.2;
    auto g = st::gen(Family::kForestUnion, 600, seed, 0, alpha, sc::Order::kRandom);
    sc::EdgeStream s = sc::to_stream(g);
    auto res = sc::peel(s, alpha, gamma);
    const auto& lp = res.partition;
    const auto threshold = sc::peel_threshold(alpha, gamma);
    CAPTURE(seed);

    CHECK(res.passes == lp.k);
    CHECK(lp.k <= sc::peel_pass_bound(600, gamma));
    CHECK(sc::check_p1(s, lp) <= threshold);

    sc::StoredGraph sg = st::stored(g);
    for (sc::VertexId v = 0; v < 600; ++v) {
      REQUIRE(lp.layer[v] >= 1);
      REQUIRE(lp.layer[v] <= lp.k);
      // Degree among vertices still active at removal time.
      std::uint32_t later = 0, out = 0;
      for (sc::VertexId w : sg.neighbors(v)) {
        if (lp.layer[w] >= lp.layer[v]) ++later;
        if (sc::key_less(v, w, lp)) ++out;
      }
      CHECK(lp.witnessed_degree[v] == later);
      CHECK(lp.witnessed_degree[v] <= threshold);
      // Out-degree under orient counts the same neighbors minus same-layer
      // lower ids.
      std::uint32_t oriented_out = 0;
      for (sc::VertexId w : sg.neighbors(v)) {
        if (sc::orient({v, w}, lp).first == v) ++oriented_out;
      }
      CHECK(oriented_out == out);
      CHECK(out <= threshold);
    }
    for (const Edge& e : g.edges) {
      auto [tail, head] = sc::orient(e, lp);
      CHECK(sc::key_less(tail, head, lp));
      CHECK_FALSE(sc::key_less(head, tail, lp));
    }
  }
}
