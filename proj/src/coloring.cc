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

#include "streamcolor/coloring.h"

#include <algorithm>

namespace streamcolor {

Coloring make_coloring(std::vector<ColorId> color, std::uint64_t palette_size) {
  std::vector<ColorId> distinct;
  distinct.reserve(color.size());
  for (ColorId c : color) {
    if (c != kNoColor) distinct.push_back(c);
  }
  std::sort(distinct.begin(), distinct.end());
  auto used = std::unique(distinct.begin(), distinct.end()) - distinct.begin();
  Coloring out;
  out.color = std::move(color);
  out.palette_size = palette_size;
  out.colors_used = static_cast<std::uint64_t>(used);
  return out;
}

}  // namespace streamcolor
