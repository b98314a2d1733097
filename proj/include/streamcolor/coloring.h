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

#ifndef STREAMCOLOR_COLORING_H_
#define STREAMCOLOR_COLORING_H_

#include <cstdint>
#include <limits>
#include <vector>

#include "streamcolor/graph.h"

namespace streamcolor {

using ColorId = std::uint32_t;
inline constexpr ColorId kNoColor = std::numeric_limits<ColorId>::max();

// Final vertex -> color map. palette_size is the number of colors the
// producing algorithm had available; colors_used counts distinct values.
struct Coloring {
  std::vector<ColorId> color;
  std::uint64_t palette_size = 0;
  std::uint64_t colors_used = 0;
};

// Fills colors_used from the assignment.
Coloring make_coloring(std::vector<ColorId> color, std::uint64_t palette_size);

}  // namespace streamcolor

#endif  // STREAMCOLOR_COLORING_H_
