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

#ifndef RANKGRID_TESTS_CORPUS_HPP_
#define RANKGRID_TESTS_CORPUS_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "rankgrid/graph.hpp"
#include "rankgrid/ranking.hpp"

namespace rankgrid::testing {

/// Random connected graph: a random spanning tree plus extra edges with
/// probability `density`. Coordinates are (0, i), only for identity.
inline Graph random_connected(std::mt19937_64& rng, int n, double density) {
  std::set<std::pair<int, int>> edges;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    const int a = order[i], b = order[pick(rng)];
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  std::bernoulli_distribution extra(density);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (extra(rng)) edges.insert({a, b});
    }
  }
  std::vector<Coord> coords;
  for (int i = 0; i < n; ++i) coords.push_back({0, i});
  return Graph(n, {edges.begin(), edges.end()}, std::move(coords));
}

/// Fixed corpus: `count` random connected graphs with min..max vertices.
inline std::vector<Graph> corpus(int count, int min_vertices, int max_vertices, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(min_vertices, max_vertices);
  std::uniform_real_distribution<double> density(0.0, 0.6);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_connected(rng, size(rng), density(rng)));
  return out;
}

/// Definition checked literally: every simple path between two vertices
/// with equal labels must pass through a strictly larger label. Enumerates
/// simple paths, so only for small graphs.
inline bool valid_by_paths(const Graph& g, const std::vector<int>& labels) {
  const int n = g.vertex_count();
  std::vector<char> on_path(n, 0);
  bool ok = true;
  // Extends a path from `v`; `top` is the largest interior label so far.
  std::function<void(int, int, int)> walk = [&](int start, int v, int top) {
    for (int w : g.neighbors(v)) {
      if (!ok || on_path[w]) continue;
      if (w > start && labels[w] == labels[start] && top <= labels[start]) {
        ok = false;
        return;
      }
      on_path[w] = 1;
      walk(start, w, std::max(top, labels[w]));
      on_path[w] = 0;
    }
  };
  for (int s = 0; s < n && ok; ++s) {
    on_path[s] = 1;
    walk(s, s, 0);
    on_path[s] = 0;
  }
  return ok;
}

}  // namespace rankgrid::testing

#endif  // RANKGRID_TESTS_CORPUS_HPP_
