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

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error, 3 algorithmic abort or peeling stall.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "streamcolor/arb_color.h"
#include "streamcolor/corpus.h"
#include "streamcolor/delta_color.h"
#include "streamcolor/edge_stream.h"
#include "streamcolor/io.h"
#include "streamcolor/oracle.h"
#include "streamcolor/peel.h"
#include "streamcolor/stored_graph.h"
#include "streamcolor/sweep.h"

namespace sc = streamcolor;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kAlgorithmFailure = 3;

// Writes through `fn` to `path`, or stdout for "-".
template <typename Fn>
void with_output(const std::string& path, Fn fn) {
  if (path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  fn(out);
}

void maybe_write_metrics(const std::string& path, const nlohmann::json& j) {
  if (!path.empty()) sc::write_json(path, j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-streaming graph coloring toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a test graph as an edge list");
  std::string family = "gnm", order = "as-generated", gen_out = "-";
  sc::GenSpec spec;
  gen->add_option("--family", family,
                  "gnm|forest-union|complete|star|cycle|path|petersen")->required();
  gen->add_option("--n", spec.n, "Vertex count");
  gen->add_option("--m", spec.m, "Edge count (gnm)");
  gen->add_option("--alpha", spec.alpha, "Forest count (forest-union)");
  gen->add_option("--seed", spec.seed, "Generator seed");
  gen->add_option("--order", order,
                  "as-generated|random|sorted-by-endpoint|layered-adversarial");
  gen->add_option("-o,--output", gen_out, "Output path, '-' for stdout");

  // maxdeg
  auto* maxdeg = app.add_subcommand("maxdeg", "Print the maximum degree (one pass)");
  std::string input;
  maxdeg->add_option("-i,--input", input, "Edge-list file")->required();

  // color-delta
  auto* cdelta = app.add_subcommand("color-delta", "One-pass (1+eps)Delta coloring");
  std::optional<std::uint32_t> delta;
  double epsilon = 0.5, c = sc::kDefaultC;
  std::uint64_t seed = 0;
  std::string out_path = "-", metrics_path;
  cdelta->add_option("-i,--input", input, "Edge-list file")->required();
  cdelta->add_option("--delta", delta, "Max degree or an upper bound (measured if omitted)");
  cdelta->add_option("--epsilon", epsilon, "Color slack epsilon > 0")->required();
  cdelta->add_option("--c", c, "Concentration constant c > 0")->capture_default_str();
  cdelta->add_option("--seed", seed, "Run seed");
  cdelta->add_option("-o,--output", out_path, "Coloring output, '-' for stdout");
  cdelta->add_option("--metrics", metrics_path, "Metrics JSON output");

  // peel
  auto* peel_cmd = app.add_subcommand("peel", "Multi-pass degree peeling into layers");
  std::uint32_t alpha = 1;
  double gamma = 1.0;
  peel_cmd->add_option("-i,--input", input, "Edge-list file")->required();
  peel_cmd->add_option("--alpha", alpha, "Arboricity upper bound")->required();
  peel_cmd->add_option("--gamma", gamma, "Slack gamma > 0")->required();
  peel_cmd->add_option("-o,--output", out_path, "Layer output, '-' for stdout");

  // color-arb
  auto* carb = app.add_subcommand("color-arb", "(2+eps)alpha coloring");
  carb->add_option("-i,--input", input, "Edge-list file")->required();
  carb->add_option("--alpha", alpha, "Arboricity upper bound")->required();
  carb->add_option("--epsilon", epsilon, "Color slack epsilon > 0")->required();
  carb->add_option("--c", c, "Concentration constant c > 0")->capture_default_str();
  carb->add_option("--seed", seed, "Run seed");
  carb->add_option("-o,--output", out_path, "Coloring output, '-' for stdout");
  carb->add_option("--metrics", metrics_path, "Metrics JSON output");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a coloring against an edge list");
  std::string coloring_path;
  verify->add_option("-i,--input", input, "Edge-list file")->required();
  verify->add_option("-c,--coloring", coloring_path, "Coloring file")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Offline reference computations");
  oracle->require_subcommand(1);
  auto* o_arb = oracle->add_subcommand("arboricity", "Exact arboricity (n <= 20)");
  o_arb->add_option("-i,--input", input, "Edge-list file")->required();
  auto* o_deg = oracle->add_subcommand("degeneracy", "Degeneracy and removal order");
  o_deg->add_option("-i,--input", input, "Edge-list file")->required();
  o_deg->add_option("-o,--output", out_path, "Removal order output (one id per line)");
  auto* o_greedy = oracle->add_subcommand("greedy", "First-fit coloring");
  std::string greedy_order = "degeneracy";
  o_greedy->add_option("-i,--input", input, "Edge-list file")->required();
  o_greedy->add_option("--order", greedy_order, "id|degeneracy (reverse removal order)");
  o_greedy->add_option("-o,--output", out_path, "Coloring output, '-' for stdout");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run a parameter grid from a JSON spec");
  std::string sweep_spec, sweep_out;
  sweep->add_option("--spec", sweep_spec, "Sweep spec JSON")->required();
  sweep->add_option("--out", sweep_out, "Output directory (overrides the spec)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      spec.family = sc::parse_family(family);
      spec.order = sc::parse_order(order);
      sc::GeneratedGraph g = sc::generate(spec);
      with_output(gen_out, [&](std::ostream& out) {
        sc::write_edge_list(out, g.meta.n, g.edges);
      });
      return kOk;
    }
    if (maxdeg->parsed()) {
      sc::EdgeStream stream = sc::open_stream(input);
      std::cout << sc::measure_max_degree(stream) << '\n';
      return kOk;
    }
    if (cdelta->parsed()) {
      sc::EdgeStream stream = sc::open_stream(input);
      const std::uint32_t d = delta ? *delta : sc::measure_max_degree(stream);
      try {
        sc::DeltaResult res = sc::run_algorithm1(stream, d, epsilon, c, seed);
        with_output(out_path, [&](std::ostream& out) { sc::write_coloring(out, res.coloring); });
        maybe_write_metrics(metrics_path, sc::to_json(res.metrics));
      } catch (const sc::AbortError& err) {
        std::cerr << "abort: " << err.what() << '\n';
        maybe_write_metrics(metrics_path, sc::to_json(err.metrics()));
        return kAlgorithmFailure;
      }
      return kOk;
    }
    if (peel_cmd->parsed()) {
      sc::EdgeStream stream = sc::open_stream(input);
      try {
        sc::PeelResult res = sc::peel(stream, alpha, gamma);
        with_output(out_path, [&](std::ostream& out) { sc::write_layers(out, res.partition); });
        std::cerr << "layers: " << res.partition.k << ", passes: " << res.passes << '\n';
      } catch (const sc::StallError& err) {
        std::cerr << "stall: " << err.what() << '\n';
        return kAlgorithmFailure;
      }
      return kOk;
    }
    if (carb->parsed()) {
      sc::EdgeStream stream = sc::open_stream(input);
      try {
        sc::ArbResult res = sc::run_algorithm3(stream, alpha, epsilon, c, seed);
        with_output(out_path, [&](std::ostream& out) { sc::write_coloring(out, res.coloring); });
        maybe_write_metrics(metrics_path, sc::to_json(res.metrics));
      } catch (const sc::StallError& err) {
        std::cerr << "stall: " << err.what() << '\n';
        sc::ArbRunMetrics m;
        m.n = stream.n();
        m.m = stream.meta().m.value_or(0);
        m.ell = sc::make_arb_config(stream.n(), alpha, epsilon, c, seed).ell;
        m.k = err.round() - 1;
        m.passes = stream.pass_count();
        m.stalled = true;
        m.seed = seed;
        maybe_write_metrics(metrics_path, sc::to_json(m));
        return kAlgorithmFailure;
      }
      return kOk;
    }
    if (verify->parsed()) {
      sc::EdgeStream stream = sc::open_stream(input);
      std::ifstream in(coloring_path);
      if (!in) throw std::runtime_error("cannot open " + coloring_path);
      sc::Coloring col = sc::read_coloring(in, stream.n());
      auto bad = sc::verify_proper(stream, col);
      for (const sc::Edge& e : bad) {
        std::cout << "conflict " << e.u << ' ' << e.v << " color " << col.color[e.u] << '\n';
      }
      std::cout << (bad.empty() ? "proper" : "improper") << ": " << bad.size()
                << " conflicting edges, " << col.colors_used << " colors\n";
      return bad.empty() ? kOk : kVerifyFailed;
    }
    if (oracle->parsed()) {
      sc::EdgeStream stream = sc::open_stream(input);
      sc::StoredGraph g = sc::load_graph(stream);
      if (o_arb->parsed()) {
        std::cout << sc::nash_williams_arboricity(g) << '\n';
      } else if (o_deg->parsed()) {
        sc::DegeneracyResult res = sc::degeneracy(g);
        std::cout << res.d << '\n';
        if (o_deg->count("--output")) {
          with_output(out_path, [&](std::ostream& out) {
            for (sc::VertexId v : res.order) out << v << '\n';
          });
        }
      } else {
        std::vector<sc::VertexId> order;
        if (greedy_order == "id") {
          for (sc::VertexId v = 0; v < g.n(); ++v) order.push_back(v);
        } else if (greedy_order == "degeneracy") {
          order = sc::degeneracy(g).order;
          std::reverse(order.begin(), order.end());
        } else {
          std::cerr << "unknown --order '" << greedy_order << "'\n";
          return kUsage;
        }
        sc::Coloring col = sc::greedy_color(g, order);
        with_output(out_path, [&](std::ostream& out) { sc::write_coloring(out, col); });
      }
      return kOk;
    }
    if (sweep->parsed()) {
      std::ifstream in(sweep_spec);
      if (!in) throw std::runtime_error("cannot open " + sweep_spec);
      sc::SweepSpec s = sc::parse_sweep_spec(nlohmann::json::parse(in));
      if (!sweep_out.empty()) s.output_dir = sweep_out;
      sc::SweepSummary summary = sc::run_sweep(s);
      std::cout << summary.rows.size() << " rows (" << summary.executed << " run, "
                << summary.skipped << " reused) -> "
                << (s.output_dir / "summary.csv").string() << '\n';
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
