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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "streamcolor/edge_stream.h"
#include "streamcolor/rng.h"
#include "streamcolor/stored_graph.h"
#include "test_support.h"

namespace sc = streamcolor;
using sc::Edge;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("streamcolor_" + name);
  std::ofstream(path) << body;
  return path;
}

std::size_t error_line(const std::string& text) {
  try {
    sc::open_stream_text(text);
  } catch (const sc::FormatError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("open_stream parses header and edges") {
  sc::EdgeStream s = sc::open_stream_text("3 2\n0 1\n1 2");
  CHECK(s.n() == 3);
  CHECK(s.meta().m == 2u);
  CHECK(s.pass_count() == 0);
}

TEST_CASE("open_stream rejects bad lines with their line number") {
  CHECK(error_line("2 1\n0 0") == 2);   // self-loop
  CHECK(error_line("2 1\n0 5") == 2);   // out of range
  CHECK(error_line("4 0\n# c\n0 1\n1 x\n") == 4);
  CHECK(error_line("4 0\n0 1 2\n") == 2);
  CHECK(error_line("x y\n") == 1);
  CHECK_THROWS_AS(sc::open_stream_text("# only a comment\n"), sc::FormatError);
  // Declared count must match.
  CHECK_THROWS_AS(sc::open_stream_text("3 3\n0 1\n1 2\n"), sc::FormatError);
}

TEST_CASE("comments, blank lines and unknown m are accepted") {
  sc::EdgeStream s = sc::open_stream_text("# header next\n4 0\n\n0 1\n# mid\n2 3\r\n");
  CHECK(s.meta().m == 2u);
  std::vector<Edge> seen;
  s.run_pass({[&](const Edge& e) { seen.push_back(e); }});
  CHECK(seen == std::vector<Edge>{{0, 1}, {2, 3}});
}

TEST_CASE("in-memory streams validate endpoints") {
  CHECK_THROWS_AS(sc::open_stream(3, {{0, 3}}), sc::FormatError);
  CHECK_THROWS_AS(sc::open_stream(3, {{1, 1}}), sc::FormatError);
}

TEST_CASE("run_pass fans out to every sink in order and counts passes") {
  sc::EdgeStream s = sc::open_stream(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  std::vector<Edge> a, b;
  auto stats = s.run_pass({[&](const Edge& e) { a.push_back(e); },
                           [&](const Edge& e) { b.push_back(e); }});
  CHECK(stats.edges_delivered == 5);
  CHECK(a.size() == 5);
  CHECK(a == b);
  CHECK(s.pass_count() == 1);

  sc::EdgeStream empty = sc::open_stream(4, {});
  int calls = 0;
  empty.run_pass({[&](const Edge&) { ++calls; }});
  CHECK(calls == 0);
  CHECK(empty.pass_count() == 1);

  for (int i = 0; i < 3; ++i) empty.run_pass({});
  CHECK(empty.pass_count() == 4);
}

TEST_CASE("file-backed stream re-reads the file each pass") {
  auto path = temp_file("core.txt", "5 4\n0 1\n# note\n1 2\n2 3\n3 4\n");
  sc::EdgeStream s = sc::open_stream(path);
  CHECK(s.pass_count() == 0);
  const auto d1 = sc::stream_digest(s);
  const auto d2 = sc::stream_digest(s);
  CHECK(d1 == d2);
  CHECK(s.pass_count() == 2);
  CHECK(sc::measure_max_degree(s) == 2);
  CHECK(s.pass_count() == 3);

  auto bad = temp_file("bad.txt", "2 1\n0 0\n");
  CHECK_THROWS_AS(sc::open_stream(bad), sc::FormatError);
  CHECK_THROWS(sc::open_stream(std::filesystem::path("/nonexistent/graph.txt")));
}

TEST_CASE("replay determinism across passes") {
  auto g = sc::testing::gen(sc::Family::kGnm, 300, 11, 2000, 1, sc::Order::kRandom);
  sc::EdgeStream s = sc::to_stream(g);
  std::vector<Edge> first, second;
  s.run_pass({[&](const Edge& e) { first.push_back(e); }});
  s.run_pass({[&](const Edge& e) { second.push_back(e); }});
  CHECK(first == second);
  CHECK(sc::stream_digest(s) == sc::stream_digest(s));
}

TEST_CASE("measure_max_degree") {
  sc::EdgeStream star = sc::open_stream(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK(sc::measure_max_degree(star) == 5);
  sc::EdgeStream empty = sc::open_stream(10, {});
  CHECK(sc::measure_max_degree(empty) == 0);
  // Petersen is 3-regular: every vertex has one outer/inner cycle pair and
  // one spoke.
  auto pet = sc::testing::gen(sc::Family::kPetersen, 10);
  sc::EdgeStream ps = sc::to_stream(pet);
  CHECK(sc::measure_max_degree(ps) == 3);
  CHECK(ps.pass_count() == 1);
}

TEST_CASE("StoredGraph accounting") {
  sc::StoredGraph g(4);
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(1, 0));
  CHECK(g.stored_edges() == 1);
  g.add_edge(1, 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.peak_stored_edges() == 2);
  g.clear();
  CHECK(g.stored_edges() == 0);
  CHECK(g.peak_stored_edges() == 2);
  g.add_edge(2, 3);
  CHECK(g.peak_stored_edges() == 2);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
}

TEST_CASE("StoredGraph matches a set-based shadow under random inserts") {
  sc::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(sc::uniform_below(rng, 15));
    sc::StoredGraph g(n);
    std::set<std::pair<std::uint32_t, std::uint32_t>> shadow;
    for (int i = 0; i < 80; ++i) {
      auto u = static_cast<sc::VertexId>(sc::uniform_below(rng, n));
      auto v = static_cast<sc::VertexId>(sc::uniform_below(rng, n));
      if (u == v) continue;
      const bool fresh = shadow.insert({std::min(u, v), std::max(u, v)}).second;
      CHECK(g.add_edge(u, v) == fresh);
      CHECK(g.stored_edges() == shadow.size());
      CHECK(g.peak_stored_edges() >= g.stored_edges());
    }
    CHECK(g.edges().size() == shadow.size());
  }
}
