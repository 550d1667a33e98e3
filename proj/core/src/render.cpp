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

#include "rankgrid/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rankgrid/verify.hpp"

namespace rankgrid {

namespace {

void require_valid(const Ranking& r, const char* what) {
  if (r.graph().vertex_count() == 0) throw UsageError(std::string(what) + ": empty graph");
  if (!is_valid(r)) throw UsageError(std::string(what) + ": refusing to draw an invalid ranking");
}

struct Extent {
  int min_row, max_row, min_col, max_col;
};

Extent extent_of(const Graph& g) {
  Extent e{g.coord(0).row, g.coord(0).row, g.coord(0).col, g.coord(0).col};
  for (Coord c : g.coords()) {
    e.min_row = std::min(e.min_row, c.row);
    e.max_row = std::max(e.max_row, c.row);
    e.min_col = std::min(e.min_col, c.col);
    e.max_col = std::max(e.max_col, c.col);
  }
  return e;
}

std::string rtrim(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

std::string render_ascii(const Ranking& r) {
  require_valid(r, "render_ascii");
  const Graph& g = r.graph();
  const Extent e = extent_of(g);
  const int w = static_cast<int>(std::to_string(r.label_count()).size());
  const int cols = e.max_col - e.min_col + 1;
  const int line_width = cols * (w + 1);
  auto x_of = [&](int col) { return (col - e.min_col) * (w + 1); };

  const int rows = e.max_row - e.min_row + 1;
  std::vector<std::string> lines(2 * rows - 1, std::string(line_width, ' '));
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Coord c = g.coord(v);
    std::string text = std::to_string(r.label(v));
    text.insert(0, w - text.size(), ' ');
    lines[2 * (c.row - e.min_row)].replace(x_of(c.col), w, text);
  }
  for (auto [u, v] : g.edges()) {
    Coord a = g.coord(u), b = g.coord(v);
    if (b < a) std::swap(a, b);
    const int dr = b.row - a.row, dc = b.col - a.col;
    const int line = 2 * (a.row - e.min_row);
    if (dr == 0 && dc == 1) {
      lines[line][x_of(a.col) + w] = '-';
    } else if (dr == 1 && dc == 0) {
      lines[line + 1][x_of(a.col) + w - 1] = '|';
    } else if (dr == 1 && (dc == 1 || dc == -1)) {
      char& slot = lines[line + 1][x_of(std::min(a.col, b.col)) + w];
      const char mark = dc == 1 ? '\\' : '/';
      slot = (slot == ' ' || slot == mark) ? mark : 'X';
    }
  }
  std::string out;
  for (auto& l : lines) out += rtrim(l) + "\n";
  return out;
}

std::string render_svg(const Ranking& r) {
  require_valid(r, "render_svg");
  const Graph& g = r.graph();
  const Extent e = extent_of(g);
  constexpr int kStep = 40, kMargin = 30, kRadius = 13, kLegendWidth = 150;
  const int top = r.label_count();
  std::map<int, int> counts;
  for (int l : r.labels()) ++counts[l];

  const int grid_w = (e.max_col - e.min_col) * kStep + 2 * kMargin;
  const int grid_h = (e.max_row - e.min_row) * kStep + 2 * kMargin;
  const int legend_h = static_cast<int>(counts.size()) * 20 + 2 * kMargin;
  const int width = grid_w + kLegendWidth;
  const int height = std::max(grid_h, legend_h);
  auto x_of = [&](Coord c) { return kMargin + (c.col - e.min_col) * kStep; };
  auto y_of = [&](Coord c) { return kMargin + (c.row - e.min_row) * kStep; };
  auto colour = [&](int label) {
    const int hue = top <= 1 ? 210 : 210 - (label - 1) * 210 / (top - 1);
    return "hsl(" + std::to_string(hue) + ",70%,75%)";
  };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"monospace\" font-size=\"12\">\n";
  o << "<g class=\"edges\" stroke=\"#888\" stroke-width=\"2\">\n";
  for (auto [u, v] : g.edges()) {
    o << "<line x1=\"" << x_of(g.coord(u)) << "\" y1=\"" << y_of(g.coord(u)) << "\" x2=\""
      << x_of(g.coord(v)) << "\" y2=\"" << y_of(g.coord(v)) << "\"/>\n";
  }
  o << "</g>\n<g class=\"vertices\">\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Coord c = g.coord(v);
    const int l = r.label(v);
    const bool is_top = l == top;
    o << "<circle cx=\"" << x_of(c) << "\" cy=\"" << y_of(c) << "\" r=\"" << kRadius << "\" fill=\""
      << colour(l) << "\" stroke=\"" << (is_top ? "#c00" : "#333") << "\" stroke-width=\""
      << (is_top ? 3 : 1) << "\"" << (is_top ? " class=\"max-label\"" : "") << "/>\n";
    o << "<text x=\"" << x_of(c) << "\" y=\"" << y_of(c) + 4 << "\" text-anchor=\"middle\">" << l
      << "</text>\n";
  }
  o << "</g>\n<g class=\"legend\">\n";
  o << "<text x=\"" << grid_w << "\" y=\"" << kMargin - 10 << "\">labels: " << counts.size()
    << "</text>\n";
  int row = 0;
  for (auto [label, count] : counts) {
    const int y = kMargin + row++ * 20;
    o << "<g class=\"legend-entry\"><rect x=\"" << grid_w << "\" y=\"" << y - 6 << "\" width=\"12\" height=\"12\" fill=\""
      << colour(label) << "\"/><text x=\"" << grid_w + 18 << "\" y=\"" << y + 4 << "\">" << label
      << " x" << count << "</text></g>\n";
  }
  o << "</g>\n</svg>\n";
  return o.str();
}

}  // namespace rankgrid
