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

#include "rankgrid/verify.hpp"

#include <algorithm>
#include <string>

namespace rankgrid {

Ranking::Ranking(std::shared_ptr<const Graph> graph, std::vector<int> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
  if (!graph_) throw UsageError("ranking: missing graph");
  if (static_cast<int>(labels_.size()) != graph_->vertex_count()) {
    throw UsageError("ranking: " + std::to_string(labels_.size()) + " labels for " +
                     std::to_string(graph_->vertex_count()) + " vertices");
  }
  for (int l : labels_) {
    if (l < 1) throw UsageError("ranking: labels must be positive");
  }
}

Ranking::Ranking(const Graph& graph, std::vector<int> labels)
    : Ranking(std::make_shared<const Graph>(graph), std::move(labels)) {}

int Ranking::label_count() const {
  return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
}

Ranking Ranking::restricted_to(std::shared_ptr<const Graph> target) const {
  std::vector<int> out;
  out.reserve(target->vertex_count());
  std::vector<int> source_index(target->vertex_count());
  for (int v = 0; v < target->vertex_count(); ++v) {
    auto idx = graph_->index_of(target->coord(v));
    if (!idx) throw UsageError("restrict: target vertex missing from source graph");
    source_index[v] = *idx;
    out.push_back(labels_[*idx]);
  }
  for (auto [u, v] : target->edges()) {
    if (!graph_->has_edge(source_index[u], source_index[v])) {
      throw UsageError("restrict: target edge missing from source graph");
    }
  }
  return Ranking(std::move(target), std::move(out));
}

namespace {

// Shortest path from `from` to `to` through vertices with label <= level.
std::vector<int> level_path(const Graph& g, std::span<const int> labels, int level, int from,
                            int to) {
  std::vector<int> parent(g.vertex_count(), -2);
  std::vector<int> queue{from};
  parent[from] = -1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int u = queue[i];
    if (u == to) break;
    for (int w : g.neighbors(u)) {
      if (parent[w] == -2 && labels[w] <= level) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

ValidationResult validate(const Graph& g, std::span<const int> labels) {
  const int n = g.vertex_count();
  if (static_cast<int>(labels.size()) != n) {
    throw UsageError("validate: " + std::to_string(labels.size()) + " labels for " +
                     std::to_string(n) + " vertices");
  }
  int top = 0;
  for (int l : labels) {
    if (l < 1) throw UsageError("validate: labels must be positive");
    top = std::max(top, l);
  }

  std::vector<int> comp(n);
  std::vector<int> witness;  // first vertex labelled `level` seen in each component
  std::vector<int> stack;
  for (int level = 1; level <= top; ++level) {
    std::fill(comp.begin(), comp.end(), -1);
    witness.clear();
    for (int s = 0; s < n; ++s) {
      if (labels[s] > level || comp[s] != -1) continue;
      const int id = static_cast<int>(witness.size());
      witness.push_back(-1);
      comp[s] = id;
      stack.assign(1, s);
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (labels[u] == level) {
          if (witness[id] == -1) {
            witness[id] = u;
          } else {
            int a = std::min(witness[id], u);
            int b = std::max(witness[id], u);
            return Violation{level, a, b, level_path(g, labels, level, a, b)};
          }
        }
        for (int w : g.neighbors(u)) {
          if (comp[w] == -1 && labels[w] <= level) {
            comp[w] = id;
            stack.push_back(w);
          }
        }
      }
    }
  }
  return Valid{};
}

ValidationResult validate(const Ranking& r) { return validate(r.graph(), r.labels()); }

bool is_minimal(const Ranking& r) {
  if (!is_valid(r)) throw UsageError("is_minimal: ranking is not valid");
  std::vector<int> labels = r.labels();
  for (int v = 0; v < r.graph().vertex_count(); ++v) {
    const int original = labels[v];
    for (int l = 1; l < original; ++l) {
      labels[v] = l;
      if (std::holds_alternative<Valid>(validate(r.graph(), labels))) return false;
    }
    labels[v] = original;
  }
  return true;
}

std::optional<int> alpha(const Ranking& r) {
  if (!is_valid(r)) throw UsageError("alpha: ranking is not valid");
  std::vector<int> counts(r.label_count() + 1, 0);
  for (int l : r.labels()) ++counts[l];
  for (int l = r.label_count(); l >= 1; --l) {
    if (counts[l] > 1) return l;
  }
  return std::nullopt;
}

}  // namespace rankgrid
