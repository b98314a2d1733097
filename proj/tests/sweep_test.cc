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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "streamcolor/arb_color.h"
#include "streamcolor/delta_color.h"
#include "streamcolor/io.h"
#include "streamcolor/sweep.h"

namespace sc = streamcolor;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path fresh_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("streamcolor_sweep_" + name);
  fs::remove_all(dir);
  return dir;
}

std::vector<std::string> csv_lines(const fs::path& dir) {
  std::ifstream in(dir / "summary.csv");
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  return lines;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string f; std::getline(ss, f, ',');) out.push_back(f);
  if (!s.empty() && s.back() == ',') out.push_back("");
  return out;
}

json spec_json(const fs::path& dir, std::uint32_t seeds, const std::string& algo) {
  return {{"output_dir", dir.string()},
          {"cells",
           {{{"graph", {{"family", "gnm"}, {"n", 300}, {"m", 2000}, {"seed", 5},
                        {"order", "random"}}},
             {"algorithm", algo},
             {"epsilon", {0.5}},
             {"c", {1.0}},
             {"seeds", {{"first", 10}, {"count", seeds}}}}}}};
}

}  // namespace

TEST_CASE("one-cell grid gives one row") {
  auto dir = fresh_dir("one");
  auto summary = sc::run_sweep(sc::parse_sweep_spec(spec_json(dir, 1, "delta")));
  CHECK(summary.rows.size() == 1);
  auto lines = csv_lines(dir);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == sc::kSweepCsvHeader);
  auto f = split(lines[1]);
  REQUIRE(f.size() == 15);
  CHECK(f[0] == "gnm");
  CHECK(f[8] == "delta");
  CHECK(f[9] == "1");        // passes
  CHECK(f[12] == "1");       // within bound
  CHECK(f[14] == "0");       // not aborted
}

TEST_CASE("two seeds differ only in seed-dependent columns") {
  auto dir = fresh_dir("two");
  sc::run_sweep(sc::parse_sweep_spec(spec_json(dir, 2, "arb")));
  auto lines = csv_lines(dir);
  REQUIRE(lines.size() == 3);
  auto a = split(lines[1]), b = split(lines[2]);
  REQUIRE(a.size() == b.size());
  CHECK(a[7] == "10");
  CHECK(b[7] == "11");
  // family, n, m, alpha, delta, epsilon, c, algorithm, bound are config.
  for (int col : {0, 1, 2, 3, 4, 5, 6, 8, 11}) CHECK(a[col] == b[col]);
}

TEST_CASE("sweeps resume and metrics files reproduce colorings") {
  auto dir = fresh_dir("resume");
  auto spec = sc::parse_sweep_spec(spec_json(dir, 3, "delta"));
  auto first = sc::run_sweep(spec);
  CHECK(first.executed == 3);
  const auto csv1 = csv_lines(dir);
  auto second = sc::run_sweep(spec);
  CHECK(second.executed == 0);
  CHECK(second.skipped == 3);
  CHECK(csv_lines(dir) == csv1);

  int checked = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    json record = json::parse(in);
    const json& cfg = record.at("config");
    sc::GenSpec g;
    g.family = sc::parse_family(cfg["graph"]["family"].get<std::string>());
    g.n = cfg["graph"]["n"];
    g.m = cfg["graph"]["m"];
    g.seed = cfg["graph"]["seed"];
    g.order = sc::parse_order(cfg["graph"]["order"].get<std::string>());
    auto graph = sc::generate(g);
    sc::EdgeStream s = sc::to_stream(graph);
    auto res = sc::run_algorithm1(s, cfg["delta"], cfg["epsilon"], cfg["c"], cfg["seed"]);
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(sc::fnv1a64_bytes(sc::coloring_text(res.coloring))));
    CHECK(record.at("coloring_fnv1a64") == std::string(hex));
    CHECK(record.at("metrics") == sc::to_json(res.metrics));
    ++checked;
  }
  CHECK(checked == 3);
}

TEST_CASE("failures are recorded per row and the sweep continues") {
  auto dir = fresh_dir("fail");
  json j = {{"output_dir", dir.string()},
            {"cells",
             {{{"graph", {{"family", "cycle"}, {"n", 5}}},
               {"algorithm", "arb"},
               {"alpha", {0, 1}},
               {"epsilon", {0.5}},
               {"c", {1.0}}},
              {{"graph", {{"family", "complete"}, {"n", 20}}},
               {"algorithm", "delta"},
               {"delta", 0},
               {"epsilon", {100.0}},
               {"c", {0.1}}}}}};
  auto summary = sc::run_sweep(sc::parse_sweep_spec(j));
  REQUIRE(summary.rows.size() == 3);
  CHECK(summary.rows[0].aborted == "1");  // alpha 0 stalls
  CHECK(summary.rows[1].aborted == "0");
  CHECK(summary.rows[2].aborted == "1");  // palette of 2 on K20
  CHECK_FALSE(summary.rows[0].within_bound);
  CHECK(csv_lines(dir).size() == 4);
}

TEST_CASE("spec errors") {
  CHECK_THROWS_AS(sc::parse_sweep_spec(json{{"cells", {{{"graph", {{"family", "gnm"}}},
                                                        {"algorithm", "nope"}}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sc::parse_sweep_spec(json::object()), std::invalid_argument);
}
