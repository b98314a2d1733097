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

#ifndef STREAMCOLOR_SWEEP_H_
#define STREAMCOLOR_SWEEP_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "streamcolor/corpus.h"
#include "streamcolor/delta_color.h"

namespace streamcolor {

enum class Algorithm { kDelta, kArb };

// One generated graph crossed with a parameter grid and a seed range.
struct SweepCell {
  GenSpec graph;
  Algorithm algorithm = Algorithm::kDelta;
  std::vector<double> epsilon{0.5};
  std::vector<double> c{kDefaultC};
  // kArb: alpha values to try. Empty means the generator's alpha for
  // forest-union, the oracle degeneracy otherwise.
  std::vector<std::uint32_t> alpha;
  // kDelta: Delta to pass in. Empty means the exact max degree.
  std::optional<std::uint32_t> delta;
  std::uint64_t first_seed = 0;
  std::uint32_t seed_count = 1;
};

struct SweepSpec {
  std::vector<SweepCell> cells;
  std::filesystem::path output_dir;
};

// Schema:
// {"output_dir": "...",
//  "cells": [{"graph": {"family", "n", "m", "alpha", "seed", "order"},
//             "algorithm": "delta" | "arb",
//             "epsilon": [..], "c": [..], "alpha": [..], "delta": D,
//             "seeds": {"first": F, "count": K}}]}
// Throws std::invalid_argument on schema errors.
SweepSpec parse_sweep_spec(const nlohmann::json& j);

struct SweepRow {
  std::string family;
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::string alpha;  // blank when not applicable
  std::uint32_t delta = 0;
  double epsilon = 0;
  double c = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  std::uint64_t passes = 0;
  std::uint64_t colors_used = 0;
  double bound = 0;
  bool within_bound = false;
  std::uint64_t peak_stored_edges = 0;
  std::string aborted;  // "0", "1", or "error"
};

struct SweepSummary {
  std::vector<SweepRow> rows;
  std::size_t executed = 0;
  std::size_t skipped = 0;  // metrics file already present
};

inline constexpr const char* kSweepCsvHeader =
    "family,n,m,alpha,delta,epsilon,c,seed,algorithm,passes,colors_used,bound,"
    "within_bound,peak_stored_edges,aborted";

// Runs every grid point, writing one metrics JSON per run and summary.csv.
// Runs whose metrics file exists are not repeated; their row is read back.
// A failing run is recorded in its row and the sweep continues.
SweepSummary run_sweep(const SweepSpec& spec);

std::string to_csv_line(const SweepRow& row);

}  // namespace streamcolor

#endif  // STREAMCOLOR_SWEEP_H_
