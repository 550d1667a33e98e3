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

#ifndef RANKGRID_GRAPH_HPP_
#define RANKGRID_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rankgrid {

/// Raised when a GraphShape or its decorations cannot be realized.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Planar position of a vertex. Row 0 is the top row; columns grow to the
/// right and may be negative for attachments left of the core grid.
struct Coord {
  int row = 0;
  int col = 0;
  auto operator<=>(const Coord&) const = default;
};

enum class Family { path, grid, triangle };
enum class Side { left, right };
enum class Corner { NW, NE, SW, SE };

/// Staircase attachment of columns with heights m-1, m-2, ..., 1.
///
/// A right sticky end occupies columns n, n+1, ...; column n+j holds rows
/// j+1..m-1 (bottom aligned, descending away from the grid). A left sticky
/// end is its 180-degree rotation: column -1-j holds rows 0..m-2-j.
/// `flipped` reflects the end vertically (right ends top aligned, left ends
/// bottom aligned), so a grid with two flipped-relative ends is mirror
/// symmetric instead of point symmetric.
struct StickyEnd {
  Side side = Side::right;
  bool flipped = false;
  bool operator==(const StickyEnd&) const = default;
};

struct RemoveCorner {
  Corner which = Corner::NW;
  bool operator==(const RemoveCorner&) const = default;
};

/// User-supplied extra vertices and edges, addressed by coordinate. Edges may
/// join two extra vertices or an extra vertex and an existing one.
struct CustomAttachment {
  std::vector<Coord> vertices;
  std::vector<std::pair<Coord, Coord>> edges;
  bool operator==(const CustomAttachment&) const = default;
};

using Decoration = std::variant<StickyEnd, RemoveCorner, CustomAttachment>;

std::string to_string(Family f);
std::string to_string(Side s);
std::string to_string(Corner c);
std::string describe(const Decoration& d);

/// Declarative description of a path, grid or triangle graph.
///
/// Paths have rows == 1. Triangles use `cols` as the side length and keep
/// rows == cols.
struct GraphShape {
  Family family = Family::grid;
  int rows = 1;
  int cols = 1;
  std::vector<Decoration> decorations;

  static GraphShape path(int n);
  static GraphShape grid(int m, int n);
  static GraphShape triangle(int side);

  GraphShape& with(Decoration d) &;
  GraphShape&& with(Decoration d) &&;

  int sticky_count() const;
  bool has_sticky(Side side) const;

  /// Short human-readable name, e.g. "G(4,5)+sticky_right".
  std::string name() const;

  bool operator==(const GraphShape&) const = default;
};

/// Simple undirected graph with planar coordinates.
///
/// Vertex order is canonical for graphs produced by build(): row-major over
/// the core, then attachment vertices sorted by (col, row).
class Graph {
 public:
  Graph() = default;

  /// Throws ShapeError on self-loops, duplicate edges, out-of-range
  /// endpoints or non-injective coordinates.
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
        std::vector<Coord> coords, std::optional<GraphShape> shape = {});

  int vertex_count() const { return static_cast<int>(coords_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Edges with u < v, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<Coord>& coords() const { return coords_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  const std::optional<GraphShape>& shape() const { return shape_; }

  Coord coord(int v) const { return coords_[v]; }
  std::optional<int> index_of(Coord c) const;
  bool has_edge(int u, int v) const;
  bool is_connected() const;

  /// Vertex sets of the connected components, each sorted ascending.
  std::vector<std::vector<int>> components() const;

  /// Induced subgraph on `vertices` (any order; renumbered by position).
  Graph induced(std::span<const int> vertices) const;
  Graph without_vertex(int v) const;

  /// 64-bit FNV-1a digest of vertex count, edges and coordinates, as 16 hex
  /// digits. Decorations do not enter the digest.
  std::string hash() const;

  bool operator==(const Graph& o) const {
    return edges_ == o.edges_ && coords_ == o.coords_;
  }

 private:
  std::vector<std::pair<int, int>> edges_;
  std::vector<Coord> coords_;
  std::vector<std::vector<int>> adjacency_;
  std::optional<GraphShape> shape_;
};

/// Column heights of a sticky end attached to an m-row grid.
std::vector<int> sticky_profile(int m);

/// Coordinates of the sticky end attached to the given side of G(m, n).
std::vector<Coord> sticky_cells(int m, int n, Side side, bool flipped = false);

/// Realizes a shape. Throws ShapeError naming the offending decoration.
Graph build(const GraphShape& shape);

}  // namespace rankgrid

#endif  // RANKGRID_GRAPH_HPP_
