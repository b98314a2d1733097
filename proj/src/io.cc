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

#include "streamcolor/io.h"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace streamcolor {

void write_edge_list(std::ostream& out, std::uint32_t n, const std::vector<Edge>& edges) {
  out << n << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

void write_coloring(std::ostream& out, const Coloring& c) {
  for (std::size_t v = 0; v < c.color.size(); ++v) out << v << ' ' << c.color[v] << '\n';
}

std::string coloring_text(const Coloring& c) {
  std::ostringstream out;
  write_coloring(out, c);
  return out.str();
}

Coloring read_coloring(std::istream& in, std::uint32_t n) {
  std::vector<ColorId> color(n, kNoColor);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (a[0] == '#') continue;
    if (!(fields >> b) || (fields >> extra)) {
      throw FormatError(line_no, "expected '<vertex> <color>'");
    }
    std::uint64_t v = 0, c = 0;
    auto r1 = std::from_chars(a.data(), a.data() + a.size(), v);
    auto r2 = std::from_chars(b.data(), b.data() + b.size(), c);
    if (r1.ec != std::errc() || r1.ptr != a.data() + a.size() ||
        r2.ec != std::errc() || r2.ptr != b.data() + b.size() || c >= kNoColor) {
      throw FormatError(line_no, "expected '<vertex> <color>'");
    }
    if (v >= n) throw FormatError(line_no, "vertex " + a + " out of range");
    if (color[v] != kNoColor) throw FormatError(line_no, "vertex " + a + " colored twice");
    color[v] = static_cast<ColorId>(c);
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    if (color[v] == kNoColor) {
      throw FormatError(0, "vertex " + std::to_string(v) + " has no color");
    }
  }
  return make_coloring(std::move(color), 0);
}

void write_layers(std::ostream& out, const LayerPartition& lp) {
  for (std::size_t v = 0; v < lp.layer.size(); ++v) out << v << ' ' << lp.layer[v] << '\n';
}

nlohmann::json to_json(const DeltaRunMetrics& m) {
  return {{"n", m.n},
          {"m", m.m},
          {"ell", m.ell},
          {"r", m.r},
          {"passes", m.passes},
          {"colors_used", m.colors_used},
          {"peak_stored_edges", m.peak_stored_edges},
          {"max_class_degree", m.max_class_degree},
          {"aborted", m.aborted},
          {"seed", m.seed}};
}

nlohmann::json to_json(const ArbRunMetrics& m) {
  return {{"n", m.n},
          {"m", m.m},
          {"ell", m.ell},
          {"k", m.k},
          {"passes", m.passes},
          {"colors_used", m.colors_used},
          {"per_class_out_degree", m.per_class_out_degree},
          {"peak_stored_edges", m.peak_stored_edges},
          {"stalled", m.stalled},
          {"seed", m.seed}};
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

std::uint64_t fnv1a64_bytes(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace streamcolor
