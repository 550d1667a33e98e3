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

#ifndef RANKGRID_RANKING_HPP_
#define RANKGRID_RANKING_HPP_

#include <memory>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "rankgrid/graph.hpp"

namespace rankgrid {

/// Misuse of an API (wrong lengths, bad parameters), as opposed to a
/// mathematical failure such as a ranking violation.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A labeling of a graph's vertices with positive integers.
///
/// The graph is shared and immutable. Nothing is checked beyond matching
/// length and positivity; use validate() for the ranking property.
class Ranking {
 public:
  Ranking() = default;
  Ranking(std::shared_ptr<const Graph> graph, std::vector<int> labels);
  Ranking(const Graph& graph, std::vector<int> labels);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const std::vector<int>& labels() const { return labels_; }
  int label(int v) const { return labels_[v]; }

  /// Largest label used (0 for the empty graph).
  int label_count() const;

  /// Copies the labels onto `target` by coordinate. Every target vertex must
  /// exist here and every target edge must be an edge here, so validity is
  /// preserved.
  Ranking restricted_to(std::shared_ptr<const Graph> target) const;

 private:
  std::shared_ptr<const Graph> graph_;
  std::vector<int> labels_;
};

}  // namespace rankgrid

#endif  // RANKGRID_RANKING_HPP_
