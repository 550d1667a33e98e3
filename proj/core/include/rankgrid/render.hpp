// Copyright 2026 The rankgrid Authors
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

#ifndef RANKGRID_RENDER_HPP_
#define RANKGRID_RENDER_HPP_

#include <string>

#include "rankgrid/ranking.hpp"

namespace rankgrid {

/// Text drawing on vertex coordinates: '-' for horizontal edges, '|' for
/// vertical ones, '\' and '/' for diagonals. A path labelled 1,2,1 renders
/// as "1-2-1". Edges between non-neighbouring cells are not drawn.
/// Throws UsageError when the ranking is invalid.
std::string render_ascii(const Ranking& r);

/// SVG drawing: one circle per vertex at its coordinate, coloured by label,
/// with the unique largest label outlined and a legend listing every
/// distinct label (one element with class "legend-entry" each).
/// Throws UsageError when the ranking is invalid.
std::string render_svg(const Ranking& r);

}  // namespace rankgrid

#endif  // RANKGRID_RENDER_HPP_
