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

#include "streamcolor/sweep.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "streamcolor/arb_color.h"
#include "streamcolor/delta_color.h"
#include "streamcolor/io.h"
#include "streamcolor/oracle.h"
#include "streamcolor/stored_graph.h"

namespace streamcolor {
namespace {

using nlohmann::json;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string hex64(std::uint64_t x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

json row_to_json(const SweepRow& r) {
  return {{"family", r.family},     {"n", r.n},
          {"m", r.m},               {"alpha", r.alpha},
          {"delta", r.delta},       {"epsilon", r.epsilon},
          {"c", r.c},               {"seed", r.seed},
          {"algorithm", r.algorithm}, {"passes", r.passes},
          {"colors_used", r.colors_used}, {"bound", r.bound},
          {"within_bound", r.within_bound},
          {"peak_stored_edges", r.peak_stored_edges},
          {"aborted", r.aborted}};
}

SweepRow row_from_json(const json& j) {
  SweepRow r;
  r.family = j.at("family");
  r.n = j.at("n");
  r.m = j.at("m");
  r.alpha = j.at("alpha");
  r.delta = j.at("delta");
  r.epsilon = j.at("epsilon");
  r.c = j.at("c");
  r.seed = j.at("seed");
  r.algorithm = j.at("algorithm");
  r.passes = j.at("passes");
  r.colors_used = j.at("colors_used");
  r.bound = j.at("bound");
  r.within_bound = j.at("within_bound");
  r.peak_stored_edges = j.at("peak_stored_edges");
  r.aborted = j.at("aborted");
  return r;
}

json graph_to_json(const GenSpec& g) {
  return {{"family", to_string(g.family)}, {"n", g.n},         {"m", g.m},
          {"alpha", g.alpha},              {"seed", g.seed}, {"order", to_string(g.order)}};
}

GenSpec graph_from_json(const json& j) {
  GenSpec g;
  g.family = parse_family(j.at("family").get<std::string>());
  g.n = j.value("n", 0u);
  g.m = j.value("m", std::uint64_t{0});
  g.alpha = j.value("alpha", 1u);
  g.seed = j.value("seed", std::uint64_t{0});
  g.order = parse_order(j.value("order", std::string("as-generated")));
  return g;
}

// Exact max degree and, lazily, the degeneracy of a generated graph.
struct Instance {
  GeneratedGraph graph;
  std::optional<std::uint32_t> degeneracy;

  std::uint32_t degeneracy_value() {
    if (!degeneracy) {
      EdgeStream s = to_stream(graph);
      degeneracy = streamcolor::degeneracy(load_graph(s)).d;
    }
    return *degeneracy;
  }
};

struct RunPoint {
  double epsilon;
  double c;
  std::optional<std::uint32_t> alpha;
  std::uint64_t seed;
};

std::string run_file_name(std::size_t cell, const SweepCell& sc, const RunPoint& p) {
  std::string name = "cell" + std::to_string(cell) + "_" +
                     (sc.algorithm == Algorithm::kDelta ? "delta" : "arb") +
                     "_e" + fmt_double(p.epsilon) + "_c" + fmt_double(p.c);
  if (p.alpha) name += "_a" + std::to_string(*p.alpha);
  return name + "_s" + std::to_string(p.seed) + ".json";
}

json execute(const SweepCell& sc, Instance& inst, const RunPoint& p) {
  const GeneratedGraph& g = inst.graph;
  SweepRow row;
  row.family = to_string(sc.graph.family);
  row.n = g.meta.n;
  row.m = g.edges.size();
  row.epsilon = p.epsilon;
  row.c = p.c;
  row.seed = p.seed;
  row.delta = sc.delta.value_or(*g.meta.max_degree);
  json config = {{"graph", graph_to_json(sc.graph)},
                 {"epsilon", p.epsilon},
                 {"c", p.c},
                 {"seed", p.seed}};
  json out;
  EdgeStream stream = to_stream(g);
  try {
    if (sc.algorithm == Algorithm::kDelta) {
      row.algorithm = "delta";
      if (sc.graph.family == Family::kForestUnion) row.alpha = std::to_string(sc.graph.alpha);
      row.bound = (1.0 + p.epsilon) * row.delta;
      config["algorithm"] = "delta";
      config["delta"] = row.delta;
      try {
        DeltaResult res = run_algorithm1(stream, row.delta, p.epsilon, p.c, p.seed);
        row.passes = res.metrics.passes;
        row.colors_used = res.metrics.colors_used;
        row.peak_stored_edges = res.metrics.peak_stored_edges;
        row.aborted = "0";
        out["metrics"] = to_json(res.metrics);
        out["coloring_fnv1a64"] = hex64(fnv1a64_bytes(coloring_text(res.coloring)));
      } catch (const AbortError& err) {
        row.passes = err.metrics().passes;
        row.peak_stored_edges = err.metrics().peak_stored_edges;
        row.aborted = "1";
        out["metrics"] = to_json(err.metrics());
        out["error"] = err.what();
      }
    } else {
      row.algorithm = "arb";
      const std::uint32_t alpha = *p.alpha;
      row.alpha = std::to_string(alpha);
      row.bound = (2.0 + p.epsilon) * alpha;
      config["algorithm"] = "arb";
      config["alpha"] = alpha;
      try {
        ArbResult res = run_algorithm3(stream, alpha, p.epsilon, p.c, p.seed);
        row.passes = res.metrics.passes;
        row.colors_used = res.metrics.colors_used;
        row.peak_stored_edges = res.metrics.peak_stored_edges;
        row.aborted = "0";
        out["metrics"] = to_json(res.metrics);
        out["coloring_fnv1a64"] = hex64(fnv1a64_bytes(coloring_text(res.coloring)));
      } catch (const StallError& err) {
        row.passes = stream.pass_count();
        row.aborted = "1";
        ArbRunMetrics m;
        m.n = g.meta.n;
        m.m = g.edges.size();
        m.ell = make_arb_config(g.meta.n, alpha, p.epsilon, p.c, p.seed).ell;
        m.k = err.round() - 1;
        m.passes = stream.pass_count();
        m.stalled = true;
        m.seed = p.seed;
        out["metrics"] = to_json(m);
        out["error"] = err.what();
      }
    }
  } catch (const std::exception& err) {
    row.aborted = "error";
    out["error"] = err.what();
  }
  row.within_bound = row.aborted == "0" && static_cast<double>(row.colors_used) <= row.bound;
  out["config"] = config;
  out["row"] = row_to_json(row);
  return out;
}

}  // namespace

SweepSpec parse_sweep_spec(const json& j) {
  try {
    SweepSpec spec;
    spec.output_dir = j.value("output_dir", std::string("sweep_out"));
    for (const json& cj : j.at("cells")) {
      SweepCell cell;
      cell.graph = graph_from_json(cj.at("graph"));
      const std::string algo = cj.at("algorithm");
      if (algo == "delta") {
        cell.algorithm = Algorithm::kDelta;
      } else if (algo == "arb") {
        cell.algorithm = Algorithm::kArb;
      } else {
        throw std::invalid_argument("unknown algorithm '" + algo + "'");
      }
      if (cj.contains("epsilon")) cell.epsilon = cj["epsilon"].get<std::vector<double>>();
      if (cj.contains("c")) cell.c = cj["c"].get<std::vector<double>>();
      if (cj.contains("alpha")) cell.alpha = cj["alpha"].get<std::vector<std::uint32_t>>();
      if (cj.contains("delta")) cell.delta = cj["delta"].get<std::uint32_t>();
      if (cj.contains("seeds")) {
        cell.first_seed = cj["seeds"].value("first", std::uint64_t{0});
        cell.seed_count = cj["seeds"].value("count", 1u);
      }
      if (cell.epsilon.empty() || cell.c.empty()) {
        throw std::invalid_argument("epsilon and c grids must be non-empty");
      }
      spec.cells.push_back(std::move(cell));
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad sweep spec: ") + e.what());
  }
}

std::string to_csv_line(const SweepRow& r) {
  std::ostringstream out;
  out << r.family << ',' << r.n << ',' << r.m << ',' << r.alpha << ',' << r.delta << ','
      << fmt_double(r.epsilon) << ',' << fmt_double(r.c) << ',' << r.seed << ','
      << r.algorithm << ',' << r.passes << ',' << r.colors_used << ','
      << fmt_double(r.bound) << ',' << (r.within_bound ? 1 : 0) << ','
      << r.peak_stored_edges << ',' << r.aborted;
  return out.str();
}

SweepSummary run_sweep(const SweepSpec& spec) {
  std::filesystem::create_directories(spec.output_dir);
  SweepSummary summary;
  for (std::size_t ci = 0; ci < spec.cells.size(); ++ci) {
    const SweepCell& sc = spec.cells[ci];
    std::optional<Instance> inst;
    auto instance = [&]() -> Instance& {
      if (!inst) inst.emplace(Instance{generate(sc.graph), std::nullopt});
      return *inst;
    };

    std::vector<std::optional<std::uint32_t>> alphas;
    if (sc.algorithm == Algorithm::kArb) {
      if (!sc.alpha.empty()) {
        for (auto a : sc.alpha) alphas.emplace_back(a);
      } else {
        alphas.emplace_back(std::nullopt);  // resolved per instance below
      }
    } else {
      alphas.emplace_back(std::nullopt);
    }

    for (double eps : sc.epsilon) {
      for (double c : sc.c) {
        for (auto alpha : alphas) {
          for (std::uint32_t s = 0; s < sc.seed_count; ++s) {
            RunPoint p{eps, c, alpha, sc.first_seed + s};
            if (sc.algorithm == Algorithm::kArb && !p.alpha) {
              if (sc.graph.family == Family::kForestUnion) {
                p.alpha = sc.graph.alpha;
              } else {
                p.alpha = instance().degeneracy_value();
              }
            }
            const auto path = spec.output_dir / run_file_name(ci, sc, p);
            if (std::filesystem::exists(path)) {
              std::ifstream in(path);
              summary.rows.push_back(row_from_json(json::parse(in).at("row")));
              ++summary.skipped;
              continue;
            }
            json record = execute(sc, instance(), p);
            write_json(path, record);
            summary.rows.push_back(row_from_json(record.at("row")));
            ++summary.executed;
          }
        }
      }
    }
  }
  std::ofstream csv(spec.output_dir / "summary.csv");
  csv << kSweepCsvHeader << '\n';
  for (const SweepRow& r : summary.rows) csv << to_csv_line(r) << '\n';
  return summary;
}

}  // namespace streamcolor
