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

#ifndef STREAMCOLOR_IO_H_
#define STREAMCOLOR_IO_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "streamcolor/arb_color.h"
#include "streamcolor/coloring.h"
#include "streamcolor/delta_color.h"
#include "streamcolor/graph.h"
#include "streamcolor/peel.h"

namespace streamcolor {

// "<n> <m>" then one "<u> <v>" line per edge.
void write_edge_list(std::ostream& out, std::uint32_t n, const std::vector<Edge>& edges);

// One "<vertex> <color>" line per vertex, in vertex order.
void write_coloring(std::ostream& out, const Coloring& c);
std::string coloring_text(const Coloring& c);

// Reads "<vertex> <color>" lines ('#' comments allowed) for n vertices.
// Throws FormatError on malformed lines, out-of-range or repeated vertices,
// or any vertex left without a color.
Coloring read_coloring(std::istream& in, std::uint32_t n);

// One "<vertex> <layer>" line per vertex.
void write_layers(std::ostream& out, const LayerPartition& lp);

nlohmann::json to_json(const DeltaRunMetrics& m);
nlohmann::json to_json(const ArbRunMetrics& m);

// Pretty JSON followed by a newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

std::uint64_t fnv1a64_bytes(const std::string& bytes);

}  // namespace streamcolor

#endif  // STREAMCOLOR_IO_H_
