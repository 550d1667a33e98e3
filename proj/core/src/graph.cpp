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

#include "rankgrid/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace rankgrid {

std::string to_string(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::grid: return "grid";
    case Family::triangle: return "triangle";
  }
  return "?";
}

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

std::string to_string(Corner c) {
  switch (c) {
    case Corner::NW: return "NW";
    case Corner::NE: return "NE";
    case Corner::SW: return "SW";
    case Corner::SE: return "SE";
  }
  return "?";
}

std::string describe(const Decoration& d) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, StickyEnd>) {
          return "sticky_end_" + to_string(x.side) + (x.flipped ? "_flipped" : "");
        } else if constexpr (std::is_same_v<T, RemoveCorner>) {
          return "remove_corner(" + to_string(x.which) + ")";
        } else {
          return "custom(" + std::to_string(x.vertices.size()) + " vertices, " +
                 std::to_string(x.edges.size()) + " edges)";
        }
      },
      d);
}

GraphShape GraphShape::path(int n) { return GraphShape{Family::path, 1, n, {}}; }

GraphShape GraphShape::grid(int m, int n) { return GraphShape{Family::grid, m, n, {}}; }

GraphShape GraphShape::triangle(int side) {
  return GraphShape{Family::triangle, side, side, {}};
}

GraphShape& GraphShape::with(Decoration d) & {
  decorations.push_back(std::move(d));
  return *this;
}

GraphShape&& GraphShape::with(Decoration d) && {
  decorations.push_back(std::move(d));
  return std::move(*this);
}

int GraphShape::sticky_count() const {
  return static_cast<int>(std::count_if(decorations.begin(), decorations.end(), [](const auto& d) {
    return std::holds_alternative<StickyEnd>(d);
  }));
}

bool GraphShape::has_sticky(Side side) const {
  return std::any_of(decorations.begin(), decorations.end(), [side](const auto& d) {
    const auto* s = std::get_if<StickyEnd>(&d);
    return s != nullptr && s->side == side;
  });
}

std::string GraphShape::name() const {
  std::string out;
  switch (family) {
    case Family::path: out = "P(" + std::to_string(cols) + ")"; break;
    case Family::grid:
      out = "G(" + std::to_string(rows) + "," + std::to_string(cols) + ")";
      break;
    case Family::triangle: out = "tri(" + std::to_string(cols) + ")"; break;
  }
  for (const auto& d : decorations) out += "+" + describe(d);
  return out;
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges, std::vector<Coord> coords,
             std::optional<GraphShape> shape)
    : coords_(std::move(coords)), shape_(std::move(shape)) {
  if (vertex_count < 0 || static_cast<int>(coords_.size()) != vertex_count) {
    throw ShapeError("graph: coords must list exactly one position per vertex");
  }
  std::set<Coord> seen(coords_.begin(), coords_.end());
  if (static_cast<int>(seen.size()) != vertex_count) {
    throw ShapeError("graph: two vertices share a coordinate");
  }
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw ShapeError("graph: edge endpoint out of range");
    }
    if (u == v) throw ShapeError("graph: self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw ShapeError("graph: duplicate edge");
  }
  edges_ = std::move(edges);
  adjacency_.assign(vertex_count, {});
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

std::optional<int> Graph::index_of(Coord c) const {
  auto it = std::find(coords_.begin(), coords_.end(), c);
  if (it == coords_.end()) return std::nullopt;
  return static_cast<int>(it - coords_.begin());
}

bool Graph::has_edge(int u, int v) const {
  const auto& a = adjacency_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::vector<int>> Graph::components() const {
  const int n = vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int w : adjacency_[members[i]]) {
        if (comp[w] == -1) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool Graph::is_connected() const { return vertex_count() > 0 && components().size() == 1; }

Graph Graph::induced(std::span<const int> vertices) const {
  std::vector<int> position(vertex_count(), -1);
  std::vector<Coord> coords;
  coords.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    position[vertices[i]] = static_cast<int>(i);
    coords.push_back(coords_[vertices[i]]);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : edges_) {
    if (position[u] >= 0 && position[v] >= 0) edges.emplace_back(position[u], position[v]);
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges), std::move(coords));
}

Graph Graph::without_vertex(int v) const {
  std::vector<int> keep;
  for (int u = 0; u < vertex_count(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced(keep);
}

std::string Graph::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::int64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<std::uint64_t>(x >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(vertex_count());
  for (auto c : coords_) {
    mix(c.row);
    mix(c.col);
  }
  mix(edge_count());
  for (auto [u, v] : edges_) {
    mix(u);
    mix(v);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<int> sticky_profile(int m) {
  if (m < 1) throw ShapeError("sticky_profile: m must be positive");
  std::vector<int> heights;
  for (int h = m - 1; h >= 1; --h) heights.push_back(h);
  return heights;
}

std::vector<Coord> sticky_cells(int m, int n, Side side, bool flipped) {
  std::vector<Coord> cells;
  const bool bottom = (side == Side::right) != flipped;
  for (int j = 0; j + 1 < m; ++j) {
    const int col = side == Side::right ? n + j : -1 - j;
    const int first = bottom ? j + 1 : 0;
    for (int r = first; r < first + m - 1 - j; ++r) cells.push_back({r, col});
  }
  return cells;
}

namespace {

void validate_dimensions(const GraphShape& s) {
  if (s.rows < 1 || s.cols < 1) throw ShapeError("shape: dimensions must be positive");
  if (s.family == Family::path && s.rows != 1) throw ShapeError("shape: a path has exactly one row");
  if (s.family == Family::triangle && s.rows != s.cols) {
    throw ShapeError("shape: a triangle takes a single side length");
  }
}

Coord corner_cell(const GraphShape& s, Corner c) {
  const int last_row = s.rows - 1;
  const int last_col = s.cols - 1;
  switch (c) {
    case Corner::NW: return {0, 0};
    case Corner::NE: return {0, last_col};
    case Corner::SW: return {last_row, 0};
    case Corner::SE: return {last_row, last_col};
  }
  return {0, 0};
}

}  // namespace

Graph build(const GraphShape& shape) {
  validate_dimensions(shape);

  // Core cells and edges, keyed by coordinate until the order is fixed.
  std::vector<Coord> core;
  std::vector<std::pair<Coord, Coord>> edges;
  if (shape.family == Family::triangle) {
    const int s = shape.cols;
    for (int r = 0; r < s; ++r) {
      for (int j = 0; j <= r; ++j) {
        core.push_back({r, j});
        if (j < r) edges.push_back({{r, j}, {r, j + 1}});
        if (r + 1 < s) {
          edges.push_back({{r, j}, {r + 1, j}});
          edges.push_back({{r, j}, {r + 1, j + 1}});
        }
      }
    }
  } else {
    for (int r = 0; r < shape.rows; ++r) {
      for (int c = 0; c < shape.cols; ++c) {
        core.push_back({r, c});
        if (c + 1 < shape.cols) edges.push_back({{r, c}, {r, c + 1}});
        if (r + 1 < shape.rows) edges.push_back({{r, c}, {r + 1, c}});
      }
    }
  }

  std::set<Coord> present(core.begin(), core.end());
  std::set<Coord> removed;
  std::vector<Coord> extra;
  bool seen_side[2] = {false, false};

  for (const auto& deco : shape.decorations) {
    const std::string what = describe(deco);
    if (const auto* st = std::get_if<StickyEnd>(&deco)) {
      if (shape.family != Family::grid) {
        throw ShapeError(what + ": sticky ends attach only to grids");
      }
      auto& seen = seen_side[st->side == Side::left ? 0 : 1];
      if (seen) throw ShapeError(what + ": at most one sticky end per side");
      seen = true;
      const int m = shape.rows;
      for (Coord c : sticky_cells(m, shape.cols, st->side, st->flipped)) {
        if (!present.insert(c).second) throw ShapeError(what + ": overlaps an existing vertex");
        extra.push_back(c);
        const int dir = st->side == Side::right ? -1 : 1;
        edges.push_back({c, {c.row, c.col + dir}});
      }
      for (Coord c : sticky_cells(m, shape.cols, st->side, st->flipped)) {
        Coord below{c.row + 1, c.col};
        if (present.count(below) != 0) edges.push_back({c, below});
      }
    } else if (const auto* rc = std::get_if<RemoveCorner>(&deco)) {
      if (shape.family != Family::grid && shape.family != Family::path) {
        throw ShapeError(what + ": corners can only be removed from grids");
      }
      Coord c = corner_cell(shape, rc->which);
      if (removed.count(c) != 0 || present.count(c) == 0) {
        throw ShapeError(what + ": corner vertex is absent or already removed");
      }
      removed.insert(c);
      present.erase(c);
    } else if (const auto* cu = std::get_if<CustomAttachment>(&deco)) {
      for (Coord c : cu->vertices) {
        if (!present.insert(c).second) {
          throw ShapeError(what + ": duplicates the vertex at (" + std::to_string(c.row) + "," +
                           std::to_string(c.col) + ")");
        }
        extra.push_back(c);
      }
      for (auto [a, b] : cu->edges) {
        if (a == b) throw ShapeError(what + ": self-loop");
        edges.push_back({a, b});
      }
    }
  }

  std::vector<Coord> order;
  for (Coord c : core) {
    if (removed.count(c) == 0) order.push_back(c);
  }
  std::sort(extra.begin(), extra.end(),
            [](Coord a, Coord b) { return std::pair(a.col, a.row) < std::pair(b.col, b.row); });
  order.insert(order.end(), extra.begin(), extra.end());

  std::map<Coord, int> index;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) index[order[i]] = i;

  std::set<std::pair<int, int>> edge_set;
  for (auto [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      if (removed.count(a) != 0 || removed.count(b) != 0) continue;
      throw ShapeError("shape " + shape.name() + ": edge references a missing vertex");
    }
    auto e = std::minmax(ia->second, ib->second);
    if (!edge_set.insert(e).second) {
      throw ShapeError("shape " + shape.name() + ": duplicate edge");
    }
  }

  const int count = static_cast<int>(order.size());
  Graph g(count, {edge_set.begin(), edge_set.end()}, std::move(order), shape);
  if (!g.is_connected()) throw ShapeError("shape " + shape.name() + ": graph is not connected");
  return g;
}

}  // namespace rankgrid
