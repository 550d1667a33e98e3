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

#include "rankgrid/construct.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>
#include <set>

#include "rankgrid/bounds.hpp"
#include "rankgrid/formulas.hpp"
#include "rankgrid/verify.hpp"

namespace rankgrid {

namespace {

struct EndInfo {
  bool present = false;
  bool flipped = false;
};

EndInfo end_on(const GraphShape& s, Side side) {
  for (const auto& d : s.decorations) {
    if (const auto* st = std::get_if<StickyEnd>(&d); st != nullptr && st->side == side) {
      return {true, st->flipped};
    }
  }
  return {};
}

const GraphShape& shape_of(const Ranking& r, const std::string& what) {
  if (!r.graph().shape()) throw UsageError(what + ": input graph has no shape description");
  return *r.graph().shape();
}

// Accepts only 4-row grids with exactly `ends` sticky ends and no other
// decorations.
const GraphShape& require_sticky_grid(const Ranking& r, int ends, const std::string& what) {
  const GraphShape& s = shape_of(r, what);
  const bool ok = s.family == Family::grid && s.rows == 4 && s.sticky_count() == ends &&
                  static_cast<int>(s.decorations.size()) == ends;
  if (!ok) {
    throw UsageError(what + ": expected a 4-row grid with " + std::to_string(ends) +
                     " sticky end(s), got " + s.name());
  }
  if (!is_valid(r)) throw UsageError(what + ": input ranking is not valid");
  return s;
}

LabelMap translate(const LabelMap& in, int dc) {
  LabelMap out;
  for (auto [c, l] : in) out[{c.row, c.col + dc}] = l;
  return out;
}

// 180-degree rotation of a grid with `rows` rows and core width `width`.
LabelMap rotate(const LabelMap& in, int rows, int width) {
  LabelMap out;
  for (auto [c, l] : in) out[{rows - 1 - c.row, width - 1 - c.col}] = l;
  return out;
}

LabelMap flip(const LabelMap& in, int rows) {
  LabelMap out;
  for (auto [c, l] : in) out[{rows - 1 - c.row, c.col}] = l;
  return out;
}

LabelMap shift_labels(const LabelMap& in, int by) {
  LabelMap out;
  for (auto [c, l] : in) out[c] = l + by;
  return out;
}

void put(LabelMap& out, const LabelMap& in, const std::string& what) {
  for (auto [c, l] : in) {
    if (!out.emplace(c, l).second) {
      throw InvariantViolation(what + ": pieces overlap at (" + std::to_string(c.row) + "," +
                               std::to_string(c.col) + ")");
    }
  }
}

// Diagonal of `rows` cells starting at column col0. Descending (row i at
// col0+i) when the piece on the left ends bottom aligned, ascending
// otherwise. Row 0 carries the highest label base+rows.
void put_diagonal(LabelMap& out, int rows, int col0, bool ascending, int base,
                  const std::string& what) {
  LabelMap diag;
  for (int i = 0; i < rows; ++i) diag[{i, col0 + (ascending ? rows - 1 - i : i)}] = base + rows - i;
  put(out, diag, what);
}

Graph cells_graph(std::vector<Coord> cells) {
  std::sort(cells.begin(), cells.end());
  std::map<Coord, int> index;
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) index[cells[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (auto [c, i] : index) {
    for (Coord d : {Coord{c.row, c.col + 1}, Coord{c.row + 1, c.col}}) {
      auto it = index.find(d);
      if (it != index.end()) edges.emplace_back(i, it->second);
    }
  }
  const int count = static_cast<int>(cells.size());
  return Graph(count, std::move(edges), std::move(cells));
}

// The one-sticky input turned so its end is on the right.
LabelMap one_sticky_right(const Ranking& a, const GraphShape& s, bool& flipped) {
  const EndInfo right = end_on(s, Side::right);
  if (right.present) {
    flipped = right.flipped;
    return to_label_map(a);
  }
  flipped = end_on(s, Side::left).flipped;
  return rotate(to_label_map(a), 4, s.cols);
}

}  // namespace

LabelMap to_label_map(const Ranking& r) {
  LabelMap out;
  for (int v = 0; v < r.graph().vertex_count(); ++v) out[r.graph().coord(v)] = r.label(v);
  return out;
}

Ranking assemble(const GraphShape& shape, const LabelMap& labels, const std::string& what) {
  auto g = std::make_shared<const Graph>(build(shape));
  if (static_cast<int>(labels.size()) != g->vertex_count()) {
    throw InvariantViolation(what + ": produced " + std::to_string(labels.size()) +
                             " labelled cells for " + shape.name() + " with " +
                             std::to_string(g->vertex_count()) + " vertices");
  }
  std::vector<int> out(g->vertex_count());
  for (int v = 0; v < g->vertex_count(); ++v) {
    auto it = labels.find(g->coord(v));
    if (it == labels.end()) {
      throw InvariantViolation(what + ": cell (" + std::to_string(g->coord(v).row) + "," +
                               std::to_string(g->coord(v).col) + ") of " + shape.name() +
                               " is unlabelled");
    }
    out[v] = it->second;
  }
  Ranking r(g, std::move(out));
  const auto verdict = validate(r);
  if (const auto* bad = std::get_if<Violation>(&verdict); bad != nullptr) {
    throw InvariantViolation(what + ": verifier rejected " + shape.name() + " at level " +
                             std::to_string(bad->level));
  }
  return r;
}

Ranking merge_two_sticky(const Ranking& r) {
  const std::string what = "merge_two_sticky";
  const GraphShape& s = require_sticky_grid(r, 2, what);
  const int n = s.cols;
  const int lambda = r.label_count();
  const EndInfo left = end_on(s, Side::left);
  const EndInfo right = end_on(s, Side::right);

  LabelMap out = to_label_map(r);
  LabelMap second = out;
  bool second_right = right.flipped;
  if (left.flipped != right.flipped) {
    second = flip(second, 4);
    second_right = !second_right;
  }
  put_diagonal(out, 4, n, right.flipped, lambda, what);
  put(out, translate(second, n + 4), what);

  GraphShape shape = GraphShape::grid(4, 2 * n + 4);
  shape.with(StickyEnd{Side::left, left.flipped}).with(StickyEnd{Side::right, second_right});
  return assemble(shape, out, what);
}

Ranking join_one_sticky(const Ranking& a) {
  const std::string what = "join_one_sticky";
  const GraphShape& s = require_sticky_grid(a, 1, what);
  const int n = s.cols;
  bool flipped = false;
  LabelMap first = one_sticky_right(a, s, flipped);
  LabelMap out = first;
  put_diagonal(out, 4, n, flipped, a.label_count(), what);
  put(out, translate(rotate(first, 4, n), n + 4), what);
  return assemble(GraphShape::grid(4, 2 * n + 4), out, what);
}

MergeOutput merging_lemma(const Ranking& a, const Ranking& b) {
  const std::string what = "merging_lemma";
  const GraphShape& sa = require_sticky_grid(a, 1, what);
  const GraphShape& sb = require_sticky_grid(b, 2, what);
  const int n = sa.cols;
  if (sb.cols != n - 1) {
    throw UsageError(what + ": second input must have width " + std::to_string(n - 1) + ", got " +
                     std::to_string(sb.cols));
  }
  const int lambda = a.label_count();
  if (b.label_count() != lambda) {
    throw UsageError(what + ": label counts differ (" + std::to_string(lambda) + " vs " +
                     std::to_string(b.label_count()) + ")");
  }

  bool fa = false;
  LabelMap half = one_sticky_right(a, sa, fa);
  LabelMap right_part = to_label_map(b);
  bool fb = end_on(sb, Side::right).flipped;
  if (end_on(sb, Side::left).flipped != fa) {
    right_part = flip(right_part, 4);
    fb = !fb;
  }
  put_diagonal(half, 4, n, fa, lambda, what);
  put(half, translate(right_part, n + 4), what);
  const int width = 2 * n + 3;
  GraphShape half_shape = GraphShape::grid(4, width);
  half_shape.with(StickyEnd{Side::right, fb});
  MergeOutput out{assemble(half_shape, half, what), Ranking{}};

  LabelMap full = half;
  put_diagonal(full, 4, width, fb, lambda + 4, what);
  put(full, translate(rotate(half, 4, width), width + 4), what);
  out.full = assemble(GraphShape::grid(4, 2 * width + 4), full, what);
  return out;
}

Ranking vertical_cut(int m, int n, const Ranking& sub) {
  const std::string what = "vertical_cut";
  if (m < 1 || n < 2) throw UsageError(what + ": needs m >= 1 and n >= 2");
  const int w = n / 2;  // ceil((n-1)/2)
  const int left = (n - 1) / 2;
  auto target = std::make_shared<const Graph>(build(GraphShape::grid(m, w)));
  Ranking base = [&] {
    try {
      return sub.restricted_to(target);
    } catch (const UsageError&) {
      throw UsageError(what + ": sub-ranking must cover G(" + std::to_string(m) + "," +
                       std::to_string(w) + ")");
    }
  }();
  if (base.graph().vertex_count() != sub.graph().vertex_count()) {
    throw UsageError(what + ": sub-ranking must be of G(" + std::to_string(m) + "," +
                     std::to_string(w) + ")");
  }
  if (!is_valid(base)) throw UsageError(what + ": sub-ranking is not valid");
  const int lambda = base.label_count();

  const LabelMap half = to_label_map(base);
  LabelMap out = translate(half, left + 1);
  LabelMap mirrored;
  for (auto [c, l] : half) {
    const int col = left - 1 - c.col;
    if (col >= 0) mirrored[{c.row, col}] = l;
  }
  put(out, mirrored, what);
  LabelMap column;
  for (int r = 0; r < m; ++r) column[{r, left}] = lambda + m - r;
  put(out, column, what);
  return assemble(GraphShape::grid(m, n), out, what);
}

GraphShape cut_triangle_shape(int m) {
  if (m < 1) throw UsageError("cut_triangle_shape: m must be positive");
  GraphShape s = GraphShape::grid(m, 1);
  if (m > 1) s.with(StickyEnd{Side::right});
  return s;
}

Ranking cut_triangle_ranking(int m) {
  auto g = std::make_shared<const Graph>(build(cut_triangle_shape(m)));
  std::vector<int> column;
  for (int v = 0; v < g->vertex_count(); ++v) {
    if (g->coord(v).col == 0) column.push_back(v);
  }
  auto edges = g->edges();
  for (std::size_t i = 0; i < column.size(); ++i) {
    for (std::size_t j = i + 1; j < column.size(); ++j) {
      if (!g->has_edge(column[i], column[j])) edges.emplace_back(column[i], column[j]);
    }
  }
  Graph joined(g->vertex_count(), std::move(edges), g->coords());
  const std::vector<int> labels =
      m <= 7 ? rank_exact(joined).certificate->labels() : dissection_ranking(joined).labels();
  return Ranking(g, labels);
}

Ranking diagonal_cut(int m, int n, const std::optional<Ranking>& inner, const Ranking& tri) {
  const std::string what = "diagonal_cut";
  if (m < 2) throw UsageError(what + ": needs m >= 2 (paths use vertical_cut)");
  if (n < m + 2) throw UsageError(what + ": needs n >= m + 2");
  const int left = (n - m + 1) / 2;
  const int right = n - m - left;
  const int w = left - 1;

  LabelMap piece;
  int a = 0;
  if (w > 0) {
    if (!inner) throw UsageError(what + ": missing inner ranking of G(" + std::to_string(m) + "," +
                                 std::to_string(w) + ")");
    auto target = std::make_shared<const Graph>(build(GraphShape::grid(m, w)));
    Ranking base = inner->restricted_to(target);
    if (base.graph().vertex_count() != inner->graph().vertex_count()) {
      throw UsageError(what + ": inner ranking must be of G(" + std::to_string(m) + "," +
                       std::to_string(w) + ")");
    }
    if (!is_valid(base)) throw UsageError(what + ": inner ranking is not valid");
    a = base.label_count();
    piece = to_label_map(base);
  } else if (inner) {
    throw UsageError(what + ": inner width is 0, no inner ranking expected");
  }

  auto tri_target = std::make_shared<const Graph>(build(cut_triangle_shape(m)));
  Ranking tri_base = [&] {
    try {
      return tri.restricted_to(tri_target);
    } catch (const UsageError&) {
      throw UsageError(what + ": triangle ranking must cover the side-" + std::to_string(m) +
                       " triangle piece");
    }
  }();
  if (!is_valid(tri_base)) throw UsageError(what + ": triangle ranking is not valid");
  const int b = tri_base.label_count();
  put(piece, translate(shift_labels(to_label_map(tri_base), a), left - 1), what);

  LabelMap out = piece;
  put_diagonal(out, m, left, false, a + b, what);
  const int shift = left - right;
  LabelMap mirrored;
  for (auto [c, l] : piece) {
    const int col = n - 1 - c.col + shift;
    if (col < n) mirrored[{m - 1 - c.row, col}] = l;
  }
  put(out, mirrored, what);
  return assemble(GraphShape::grid(m, n), out, what);
}

namespace {

// Dissection search state. Pieces are memoized by their translated
// coordinates and edges, so repeated shapes are solved once.
class Dissector {
 public:
  Dissector(int exact_limit, int lookahead) : exact_limit_(exact_limit), lookahead_(lookahead) {}

  // Labels for `piece` (a connected graph with coordinates), in vertex order.
  const std::vector<int>& solve(const Graph& piece) {
    const std::string key = key_of(piece);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<int> labels = piece.vertex_count() <= exact_limit_ ? exact(piece) : split(piece);
    return memo_.emplace(key, std::move(labels)).first->second;
  }

 private:
  static std::string key_of(const Graph& g) {
    Coord lo = g.coord(0);
    for (Coord c : g.coords()) lo = {std::min(lo.row, c.row), std::min(lo.col, c.col)};
    std::string key;
    for (Coord c : g.coords()) key += std::to_string(c.row - lo.row) + "," + std::to_string(c.col - lo.col) + ";";
    key += "|";
    for (auto [u, v] : g.edges()) key += std::to_string(u) + "-" + std::to_string(v) + ";";
    return key;
  }

  static std::vector<int> exact(const Graph& g) { return rank_exact(g).certificate->labels(); }

  static int top(const std::vector<int>& labels) {
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
  }

  struct Split {
    std::vector<int> separator;
    std::vector<std::vector<int>> parts;
    std::size_t worst = 0;
  };

  static std::vector<std::vector<int>> components(const Graph& g, const std::vector<char>& removed) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
      if (seen[s] || removed[s]) continue;
      std::vector<int> comp{s};
      seen[s] = 1;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (int w : g.neighbors(comp[i])) {
          if (!removed[w] && !seen[w]) {
            seen[w] = 1;
            comp.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  // Candidate line separators, most balanced first.
  static std::vector<Split> candidates(const Graph& g) {
    using Key = int (*)(Coord);
    static constexpr std::array<Key, 4> keys{
        [](Coord c) { return c.row; },
        [](Coord c) { return c.col; },
        [](Coord c) { return c.row - c.col; },
        [](Coord c) { return c.row + c.col; },
    };
    const int n = g.vertex_count();
    std::vector<Split> out;
    for (Key key : keys) {
      std::set<int> values;
      for (Coord c : g.coords()) values.insert(key(c));
      if (values.size() < 2) continue;
      for (int value : values) {
        Split s;
        std::vector<char> removed(n, 0);
        for (int v = 0; v < n; ++v) {
          if (key(g.coord(v)) == value) {
            removed[v] = 1;
            s.separator.push_back(v);
          }
        }
        s.parts = components(g, removed);
        if (s.parts.empty()) continue;
        for (auto& p : s.parts) s.worst = std::max(s.worst, p.size());
        out.push_back(std::move(s));
      }
    }
    std::stable_sort(out.begin(), out.end(), [](const Split& a, const Split& b) {
      return a.worst != b.worst ? a.worst < b.worst : a.separator.size() < b.separator.size();
    });
    return out;
  }

  // Separator vertices share a label only if neither an edge nor a common
  // neighbouring part joins them, so the separator is ranked on that
  // contracted graph and placed above every part.
  static std::vector<int> separator_labels(const Graph& g, const Split& s) {
    const int k = static_cast<int>(s.separator.size());
    std::vector<int> index(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) index[s.separator[i]] = i;
    std::set<std::pair<int, int>> edges;
    auto link = [&](int a, int b) {
      if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
    };
    for (auto [u, v] : g.edges()) {
      if (index[u] >= 0 && index[v] >= 0) link(index[u], index[v]);
    }
    for (const auto& part : s.parts) {
      std::set<int> touching;
      for (int v : part) {
        for (int w : g.neighbors(v)) {
          if (index[w] >= 0) touching.insert(index[w]);
        }
      }
      for (int a : touching) {
        for (int b : touching) {
          if (a < b) link(a, b);
        }
      }
    }
    std::vector<Coord> coords;
    for (int v : s.separator) coords.push_back(g.coord(v));
    Graph h(k, {edges.begin(), edges.end()}, std::move(coords));
    const bool complete = static_cast<long>(edges.size()) == static_cast<long>(k) * (k - 1) / 2;
    if (complete || k > 20) {
      std::vector<int> distinct(k);
      for (int i = 0; i < k; ++i) distinct[i] = i + 1;
      return complete ? distinct : heuristic_ranking(h).labels();
    }
    return rank_exact(h).certificate->labels();
  }

  std::vector<int> apply(const Graph& g, const Split& s) {
    std::vector<int> labels(g.vertex_count(), 0);
    int below = 0;
    for (const auto& part : s.parts) {
      const std::vector<int>& sub = solve(g.induced(part));
      for (std::size_t i = 0; i < part.size(); ++i) labels[part[i]] = sub[i];
      below = std::max(below, top(sub));
    }
    const std::vector<int> sep = separator_labels(g, s);
    for (std::size_t i = 0; i < sep.size(); ++i) labels[s.separator[i]] = below + sep[i];
    return labels;
  }

  std::vector<int> split(const Graph& g) {
    auto options = candidates(g);
    if (options.empty()) return exact(g);
    std::vector<int> best;
    const int tries = std::min<int>(lookahead_, static_cast<int>(options.size()));
    for (int i = 0; i < tries; ++i) {
      std::vector<int> labels = apply(g, options[i]);
      if (best.empty() || top(labels) < top(best)) best = std::move(labels);
    }
    return best;
  }

  int exact_limit_;
  int lookahead_;
  std::map<std::string, std::vector<int>> memo_;
};

}  // namespace

Ranking dissection_ranking(const Graph& g, int exact_limit) {
  if (exact_limit < 1 || exact_limit > kMaxSolverVertices) {
    throw UsageError("dissection_ranking: exact_limit must be in 1..64");
  }
  Dissector d(exact_limit, 3);
  std::vector<int> labels(g.vertex_count(), 0);
  for (auto& comp : g.components()) {
    const std::vector<int>& sub = d.solve(g.induced(comp));
    for (std::size_t i = 0; i < comp.size(); ++i) labels[comp[i]] = sub[i];
  }
  Ranking out(g, std::move(labels));
  if (!is_valid(out)) throw InvariantViolation("dissection_ranking: verifier rejected the result");
  return out;
}

TriangleRanking triangle_ranking(int s) {
  if (s < 1) throw UsageError("triangle_ranking: s must be positive");
  Graph g = build(GraphShape::triangle(s));
  TriangleRanking out;
  out.claimed = tri_bound(s);
  if (s <= 6) {
    out.ranking = *rank_exact(g).certificate;
    out.exact = true;
  } else {
    out.ranking = dissection_ranking(g);
  }
  out.achieved = out.ranking.label_count();
  if (!is_valid(out.ranking)) throw InvariantViolation("triangle_ranking: verifier rejected tri(" +
                                                       std::to_string(s) + ")");
  return out;
}

Certificate solver_certificate(const GraphShape& shape, const SolveOptions& options) {
  Graph g = build(shape);
  RankResult r = rank_exact(g, options);
  if (!r.is_exact()) {
    throw BudgetExhaustedError("solver budget exhausted on " + shape.name() + " with interval [" +
                               std::to_string(r.lower) + ", " + std::to_string(r.upper) + "]");
  }
  if (!is_valid(*r.certificate)) throw InvariantViolation("solver certificate rejected");
  return {*r.certificate, {{"solver", {}, shape.name(), r.lower}}};
}

Certificate two_sticky_base(int n) {
  std::optional<Certificate> best;
  for (bool flipped : {false, true}) {
    GraphShape s = GraphShape::grid(4, n);
    s.with(StickyEnd{Side::left, flipped}).with(StickyEnd{Side::right});
    Certificate c = solver_certificate(s);
    if (!best || c.labels() < best->labels()) best = std::move(c);
  }
  return *best;
}

Certificate one_sticky_base(int n) {
  GraphShape s = GraphShape::grid(4, n);
  s.with(StickyEnd{Side::right});
  return solver_certificate(s);
}

namespace {

using Pattern = std::array<int, 4>;

std::vector<Pattern> separator_patterns() {
  std::vector<Pattern> out;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        for (int d = 0; d < 3; ++d) {
          if (std::abs(a - b) > 1 || std::abs(b - c) > 1 || std::abs(c - d) > 1) continue;
          out.push_back({a, b, c, d});
        }
      }
    }
  }
  return out;
}

// Column layout of the segmented construction with `pieces` pieces: piece
// i owns columns [5i, 5i+2); block b (1-based) spans [5b-3, 5b).
int block_start(int b) { return 5 * b - 3; }

const Pattern& pattern_for(const SegmentPatterns& p, int b) { return b % 2 == 1 ? p.odd : p.even; }

std::vector<Coord> piece_cells(const SegmentPatterns& p, int i, int pieces) {
  const int width = 5 * pieces - 3;
  std::vector<Coord> cells;
  for (int r = 0; r < 4; ++r) {
    const int lo = i == 0 ? 0 : block_start(i) + pattern_for(p, i)[r] + 1;
    const int hi = i == pieces - 1 ? width - 1 : block_start(i + 1) + pattern_for(p, i + 1)[r] - 1;
    for (int c = lo; c <= hi; ++c) cells.push_back({r, c});
  }
  return cells;
}

bool piece_fits(const std::vector<Coord>& cells) {
  Graph g = cells_graph(cells);
  if (!g.is_connected()) return false;
  return rank_decision(g, 5).outcome == DecisionOutcome::found;
}

}  // namespace

SegmentPatterns find_segment_patterns() {
  static std::once_flag once;
  static std::optional<SegmentPatterns> found;
  std::call_once(once, [] {
    const auto patterns = separator_patterns();
    for (const Pattern& odd : patterns) {
      for (const Pattern& even : patterns) {
        SegmentPatterns p{odd, even};
        // Four pieces exercise both end pieces and both interior pieces.
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) ok = piece_fits(piece_cells(p, i, 4));
        if (ok) {
          found = p;
          return;
        }
      }
    }
  });
  if (!found) throw InvariantViolation("segmented construction: no separator patterns found");
  return *found;
}

Certificate segmented_certificate(int k) {
  const std::string what = "segmented";
  if (k < 3) throw UsageError(what + ": k must be at least 3");
  if (k > 12) throw UsageError(what + ": k above 12 is not supported");
  const SegmentPatterns p = find_segment_patterns();
  const int pieces = 1 << (k - 2);
  const int width = 5 * pieces - 3;

  LabelMap out;
  std::map<std::vector<Coord>, std::vector<int>> solved;  // keyed by cells shifted to column 0
  for (int i = 0; i < pieces; ++i) {
    const auto cells = piece_cells(p, i, pieces);
    int min_col = cells.front().col;
    for (Coord c : cells) min_col = std::min(min_col, c.col);
    std::vector<Coord> key;
    for (Coord c : cells) key.push_back({c.row, c.col - min_col});
    std::sort(key.begin(), key.end());
    auto it = solved.find(key);
    if (it == solved.end()) {
      Graph g = cells_graph(key);
      RankResult r = rank_exact(g);
      if (r.upper > 5) throw InvariantViolation(what + ": piece needs more than 5 labels");
      it = solved.emplace(key, r.certificate->labels()).first;
    }
    for (std::size_t j = 0; j < key.size(); ++j) {
      out[{key[j].row, key[j].col + min_col}] = it->second[j];
    }
  }
  for (int b = 1; b < pieces; ++b) {
    const int level = std::countr_zero(static_cast<unsigned>(b)) + 1;
    const int base = 5 + 4 * (level - 1);
    LabelMap sep;
    for (int r = 0; r < 4; ++r) sep[{r, block_start(b) + pattern_for(p, b)[r]}] = base + 4 - r;
    put(out, sep, what);
  }
  Ranking r = assemble(GraphShape::grid(4, width), out, what);
  return {r, {{what, {"k=" + std::to_string(k)}, GraphShape::grid(4, width).name(), r.label_count()}}};
}

namespace {

class EndpointBuilder {
 public:
  Certificate one_sticky(int n) {
    if (auto it = one_.find(n); it != one_.end()) return it->second;
    Certificate c;
    if (n >= 3 && n <= 5) {
      c = one_sticky_base(n);
    } else if (n > 5 && (n - 3) % 2 == 0) {
      const int half = (n - 3) / 2;
      Certificate a = one_sticky(half);
      Certificate b = two_sticky(half - 1);
      MergeOutput m = merging_lemma(a.ranking, b.ranking);
      c.ranking = m.one_sticky;
      c.steps = concat(a.steps, b.steps);
      c.steps.push_back({"merging_lemma", {name(a), name(b)}, name(c.ranking), c.labels()});
    } else {
      throw UsageError("endpoint chain: no derivation for one-sticky width " + std::to_string(n));
    }
    one_[n] = c;
    return c;
  }

  Certificate two_sticky(int n) {
    if (auto it = two_.find(n); it != two_.end()) return it->second;
    Certificate c;
    if (n >= 2 && n <= 4) {
      c = two_sticky_base(n);
    } else if (n > 4 && (n - 4) % 2 == 0) {
      Certificate b = two_sticky((n - 4) / 2);
      c.ranking = merge_two_sticky(b.ranking);
      c.steps = b.steps;
      c.steps.push_back({"merge_two_sticky", {name(b)}, name(c.ranking), c.labels()});
    } else {
      throw UsageError("endpoint chain: no derivation for two-sticky width " + std::to_string(n));
    }
    two_[n] = c;
    return c;
  }

  Certificate endpoint(std::int64_t n) {
    if (n <= 8) return solver_certificate(GraphShape::grid(4, static_cast<int>(n)));
    for (int k = 3; (std::int64_t{1} << k) <= n + 3; ++k) {
      const std::int64_t p = std::int64_t{1} << k;
      if (n == p + p / 4 - 3) return segmented_certificate(k);
    }
    if ((n - 4) % 2 != 0) {
      throw UsageError("endpoint chain: no derivation for width " + std::to_string(n));
    }
    Certificate a = one_sticky(static_cast<int>((n - 4) / 2));
    Certificate c;
    c.ranking = join_one_sticky(a.ranking);
    c.steps = a.steps;
    c.steps.push_back({"join_one_sticky", {name(a)}, name(c.ranking), c.labels()});
    return c;
  }

 private:
  static std::string name(const Certificate& c) { return name(c.ranking); }
  static std::string name(const Ranking& r) { return r.graph().shape()->name(); }
  static std::vector<ChainStep> concat(std::vector<ChainStep> a, const std::vector<ChainStep>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  std::map<int, Certificate> one_;
  std::map<int, Certificate> two_;
};

}  // namespace

std::vector<EndpointCertificate> run_endpoint_certificates(int k_max) {
  if (k_max < 3) throw UsageError("run_endpoint_certificates: k_max must be at least 3");
  if (k_max > 10) throw UsageError("run_endpoint_certificates: k_max above 10 is not supported");
  const std::int64_t limit = (std::int64_t{1} << (k_max + 1)) - 3;
  EndpointBuilder builder;
  std::vector<EndpointCertificate> out;
  for (std::int64_t n = 1; n <= limit; ++n) {
    if (rank_4xn(n + 1) == rank_4xn(n)) continue;
    EndpointCertificate e;
    e.n = n;
    e.expected = rank_4xn(n);
    e.certificate = builder.endpoint(n);
    out.push_back(std::move(e));
  }
  return out;
}

Ranking restrict_to_width(const Ranking& r, int n) {
  const GraphShape& s = shape_of(r, "restrict_to_width");
  if (n < 1 || n > s.cols) throw UsageError("restrict_to_width: width out of range");
  auto target = std::make_shared<const Graph>(build(GraphShape::grid(s.rows, n)));
  Ranking out = r.restricted_to(target);
  if (!is_valid(out)) throw InvariantViolation("restrict_to_width: verifier rejected the result");
  return out;
}

std::vector<EndpointCertificate> restriction_certificates(
    const std::vector<EndpointCertificate>& endpoints, int from, int to) {
  std::vector<EndpointCertificate> out;
  for (int n = from; n <= to; ++n) {
    auto it = std::find_if(endpoints.begin(), endpoints.end(),
                           [n](const EndpointCertificate& e) { return e.n >= n; });
    if (it == endpoints.end()) {
      throw UsageError("restriction_certificates: no endpoint at or beyond width " +
                       std::to_string(n));
    }
    EndpointCertificate e;
    e.n = n;
    e.expected = rank_4xn(n);
    e.certificate.ranking = restrict_to_width(it->certificate.ranking, n);
    e.certificate.steps = it->certificate.steps;
    e.certificate.steps.push_back({"restrict", {it->certificate.ranking.graph().shape()->name()},
                                   GraphShape::grid(4, n).name(), e.certificate.labels()});
    out.push_back(std::move(e));
  }
  return out;
}

Certificate grid4_certificate(std::int64_t n) {
  if (n < 1 || n > 2045) throw UsageError("grid4_certificate: n must be in 1..2045");
  if (n <= 8) return solver_certificate(GraphShape::grid(4, static_cast<int>(n)));
  int k = 3;
  while ((std::int64_t{1} << (k + 1)) - 3 < n) ++k;
  auto endpoints = run_endpoint_certificates(std::min(k + 1, 10));
  auto it = std::find_if(endpoints.begin(), endpoints.end(),
                         [n](const EndpointCertificate& e) { return e.n >= n; });
  if (it == endpoints.end()) throw UsageError("grid4_certificate: no endpoint covers width " + std::to_string(n));
  if (it->n == n) return it->certificate;
  return restriction_certificates({*it}, static_cast<int>(n), static_cast<int>(n)).front().certificate;
}

Ranking ruler_ranking(const GraphShape& shape) {
  const bool column = shape.family == Family::grid && shape.cols == 1;
  if (!shape.decorations.empty() || (shape.family != Family::path && !column &&
                                     !(shape.family == Family::grid && shape.rows == 1))) {
    throw UsageError("ruler_ranking: needs an undecorated path or one-column grid");
  }
  auto g = std::make_shared<const Graph>(build(shape));
  std::vector<int> labels(g->vertex_count());
  for (int v = 0; v < g->vertex_count(); ++v) {
    const Coord c = g->coord(v);
    labels[v] = std::countr_zero(static_cast<unsigned>((column ? c.row : c.col) + 1)) + 1;
  }
  return Ranking(g, std::move(labels));
}

Certificate grid_certificate(int m, int n) {
  if (m < 1 || n < 1) throw UsageError("grid_certificate: dimensions must be positive");
  const GraphShape shape = GraphShape::grid(m, n);
  if (m == 1 || n == 1) {
    Ranking r = ruler_ranking(shape);
    return {r, {{"ruler", {}, shape.name(), r.label_count()}}};
  }
  if (m == 4 && n <= 2045) return grid4_certificate(n);
  if (m * n <= 30) return solver_certificate(shape);
  Certificate sub = grid_certificate(m, n / 2);
  Certificate out;
  out.ranking = vertical_cut(m, n, sub.ranking);
  out.steps = sub.steps;
  out.steps.push_back({"vertical_cut", {sub.ranking.graph().shape()->name()}, shape.name(),
                       out.ranking.label_count()});
  return out;
}

Ranking constructive_seed(const Graph& g) {
  const auto& shape = g.shape();
  if (shape && shape->decorations.empty() && shape->family != Family::triangle) {
    const int m = shape->family == Family::path ? 1 : shape->rows;
    Certificate c = grid_certificate(m, shape->cols);
    return Ranking(g, c.ranking.labels());
  }
  return dissection_ranking(g, 16);
}

}  // namespace rankgrid
