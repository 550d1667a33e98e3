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

#ifndef RANKGRID_SOLVE_HPP_
#define RANKGRID_SOLVE_HPP_

#include <atomic>
#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "rankgrid/ranking.hpp"

namespace rankgrid {

inline constexpr const char* kSolverVersion = "rankgrid-solver/1";

/// Largest graph the exact solver accepts (vertex sets are 64-bit masks).
inline constexpr int kMaxSolverVertices = 64;

/// A search ran out of time or memory before reaching an exact answer.
class BudgetExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Method { exact, brute_force, formula, bound, construction };

std::string to_string(Method m);
std::optional<Method> method_from_string(const std::string& s);

/// Resource limits for a search. Zero means unlimited.
struct Budget {
  std::chrono::milliseconds time{0};
  std::size_t max_memo_entries = 0;
  /// Optional external stop flag, polled like the other limits; a set flag
  /// ends the search as if the budget ran out.
  const std::atomic<bool>* cancel = nullptr;
};

struct SolveOptions {
  Budget budget;
  /// Worker threads for the top-level branching; 1 is fully sequential.
  int jobs = 1;
  /// Forces single-threaded search so certificates are reproducible.
  bool deterministic = false;
  /// Optional known ranking of the same graph; seeds the upper bound.
  std::optional<Ranking> seed;
};

/// A rank value, exact or bracketed, with an optional certificate.
///
/// When the search finishes, lower == upper and the certificate (if any)
/// uses exactly that many labels. On budget exhaustion the interval is the
/// best proven bracket and the certificate realizes `upper`.
struct RankResult {
  int lower = 0;
  int upper = 0;
  Method method = Method::exact;
  std::optional<Ranking> certificate;
  std::chrono::milliseconds elapsed{0};
  bool budget_exhausted = false;
  std::size_t memo_entries = 0;

  bool is_exact() const { return lower == upper; }
  /// The exact value; throws UsageError when only an interval is known.
  int value() const;
};

enum class DecisionOutcome { found, infeasible, unknown };

struct DecisionResult {
  DecisionOutcome outcome = DecisionOutcome::unknown;
  std::optional<Ranking> ranking;
  bool budget_exhausted = false;
  std::chrono::milliseconds elapsed{0};
};

/// Exact rank number by separator recursion over connected vertex subsets.
/// Disconnected graphs take the maximum over components.
///
/// Throws UsageError for the empty graph, graphs above kMaxSolverVertices
/// or a seed ranking that does not belong to `g`.
RankResult rank_exact(const Graph& g, const SolveOptions& options = {});

/// Searches for a ranking with at most k labels.
DecisionResult rank_decision(const Graph& g, int k, const SolveOptions& options = {});

/// Independent oracle: tries every labelling with 1..λ labels for growing λ
/// and keeps the first that validate() accepts.
RankResult brute_force(const Graph& g, int vertex_cap = 8);

/// Greedy separator ranking: repeatedly removes the vertex that minimizes
/// the largest remaining component. Always valid, rarely optimal.
Ranking heuristic_ranking(const Graph& g);

/// Lower bound from a long path found greedily: floor(log2(len)) + 1.
int path_lower_bound(const Graph& g);

}  // namespace rankgrid

#endif  // RANKGRID_SOLVE_HPP_
