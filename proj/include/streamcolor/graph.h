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

#ifndef STREAMCOLOR_GRAPH_H_
#define STREAMCOLOR_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace streamcolor {

// Dense 0-based vertex index.
using VertexId = std::uint32_t;

// An undirected edge as it arrived in the stream. Endpoint order is kept
// because the one-pass colorer recolors the first-listed endpoint.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Order-independent key of an edge, for dedup and set comparisons.
inline std::uint64_t edge_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}
inline std::uint64_t edge_key(const Edge& e) { return edge_key(e.u, e.v); }

// Malformed edge-list input. `line` is 1-based; 0 when not tied to a line.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " +
                                           what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace streamcolor

#endif  // STREAMCOLOR_GRAPH_H_
