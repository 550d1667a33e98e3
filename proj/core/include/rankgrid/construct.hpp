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

#ifndef RANKGRID_CONSTRUCT_HPP_
#define RANKGRID_CONSTRUCT_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rankgrid/ranking.hpp"
#include "rankgrid/solve.hpp"

namespace rankgrid {

/// One step of a certificate derivation.
struct ChainStep {
  std::string construction;
  std::vector<std::string> inputs;
  std::string output;
  int labels = 0;
};

/// A verified ranking plus the steps that produced it.
struct Certificate {
  Ranking ranking;
  std::vector<ChainStep> steps;

  int labels() const { return ranking.label_count(); }
};

/// Coordinate-addressed labels, the working form of every construction.
using LabelMap = std::map<Coord, int>;

LabelMap to_label_map(const Ranking& r);

/// Builds `shape`, copies labels by coordinate and validates. Throws
/// InvariantViolation if the cells differ from the shape or the result is
/// not a ranking.
Ranking assemble(const GraphShape& shape, const LabelMap& labels, const std::string& what);

/// Two copies of a 4-row ranking with two sticky ends joined by a diagonal
/// of four new labels. Output: G(4, 2n+4) with two sticky ends, lambda+4
/// labels. The second copy is reflected when needed so the ends interlock.
Ranking merge_two_sticky(const Ranking& r);

/// A 4-row ranking with one sticky end joined to its own 180-degree
/// rotation through a diagonal. Output: G(4, 2n+4), lambda+4 labels.
Ranking join_one_sticky(const Ranking& a);

struct MergeOutput {
  /// G(4, 2n+3) with one sticky end, lambda+4 labels.
  Ranking one_sticky;
  /// G(4, 4n+10), lambda+8 labels.
  Ranking full;
};

/// `a` ranks G(4, n) with one sticky end, `b` ranks G(4, n-1) with two
/// sticky ends, both with the same label count.
MergeOutput merging_lemma(const Ranking& a, const Ranking& b);

/// Middle column takes the m highest labels; both sides copy `sub`, a
/// ranking of G(m, ceil((n-1)/2)), the left side mirrored. Requires n >= 2.
Ranking vertical_cut(int m, int n, const Ranking& sub);

/// Cell set of the triangle piece used by diagonal cuts: G(m, 1) plus a
/// right sticky end, i.e. cells (r, c) with c <= r < m and grid edges.
GraphShape cut_triangle_shape(int m);

/// Ranking of cut_triangle_shape(m) that stays valid when the tall column
/// is joined through lower labels (the column behaves like a clique).
/// Exact for m <= 7, line dissection above.
Ranking cut_triangle_ranking(int m);

/// Diagonal cut of m vertices with the top labels; each side is
/// G(m, w-1) ranked by `inner` (labels 1..a) and a triangle piece ranked by
/// `tri` (shifted to a+1..a+b), the right side rotated. `inner` ranks
/// G(m, ceil((n-m)/2) - 1) and is absent when that width is 0. `tri` may
/// rank any graph containing the triangle piece's coordinates.
Ranking diagonal_cut(int m, int n, const std::optional<Ranking>& inner, const Ranking& tri);

struct TriangleRanking {
  Ranking ranking;
  /// Count the closed-form upper bound claims (exact values for s < 3).
  int claimed = 0;
  int achieved = 0;
  /// True when the exact solver produced the ranking.
  bool exact = false;
};

/// Ranking of the triangle family graph of side s: exact for s <= 6,
/// recursive line separators above.
TriangleRanking triangle_ranking(int s);

/// Separator-based ranking for any graph with coordinates: removes the
/// row, column or diagonal line that best balances the remainder, labels it
/// above everything below, and solves pieces of at most `exact_limit`
/// vertices exactly.
Ranking dissection_ranking(const Graph& g, int exact_limit = 24);

/// Exact certificate for a small shape (throws when the budget runs out).
Certificate solver_certificate(const GraphShape& shape, const SolveOptions& options = {});

/// Best two-sticky-end certificate of G(4, n) over both end alignments.
Certificate two_sticky_base(int n);

/// Exact certificate of G(4, n) with one right sticky end.
Certificate one_sticky_base(int n);

/// Column offsets (0..2 inside a 3-column block) of the separators used by
/// the segmented construction; blocks alternate between the two patterns.
struct SegmentPatterns {
  std::array<int, 4> odd{};
  std::array<int, 4> even{};
};

/// Finds separator patterns for which every piece ranks with 5 labels.
SegmentPatterns find_segment_patterns();

/// G(4, 2^k + 2^(k-2) - 3) split into 2^(k-2) pieces of rank 5 by 4-vertex
/// separators labelled in ruler order: 4k-3 labels. Requires k >= 3.
Certificate segmented_certificate(int k);

struct EndpointCertificate {
  std::int64_t n = 0;
  int expected = 0;
  Certificate certificate;
};

/// A verified certificate at the right end of every constant run of the
/// 4-row closed form with width below 2^(k_max+1) - 2.
std::vector<EndpointCertificate> run_endpoint_certificates(int k_max);

/// Restricts a certificate of G(4, N) to G(4, n), n <= N.
Ranking restrict_to_width(const Ranking& r, int n);

/// Restriction certificates for every width in [from, to], each taken from
/// the endpoint of its run.
std::vector<EndpointCertificate> restriction_certificates(
    const std::vector<EndpointCertificate>& endpoints, int from, int to);

/// Certificate for G(4, n) with rank_4xn(n) labels: the solver for n <= 8,
/// else the endpoint of n's run restricted to width n. Requires n <= 2045.
Certificate grid4_certificate(std::int64_t n);

/// Ruler ranking of a path or a one-column grid: label of the i-th vertex
/// (1-based) is one plus the number of trailing zeros of i.
Ranking ruler_ranking(const GraphShape& shape);

/// Best ranking this library can certify for G(m, n) without a long search:
/// the 4-row chain, the ruler on paths, the solver on small grids (at most
/// 30 cells) and repeated vertical cuts elsewhere.
Certificate grid_certificate(int m, int n);

/// Upper-bound ranking for seeding the exact solver: grid_certificate for
/// undecorated grids and paths, line dissection otherwise.
Ranking constructive_seed(const Graph& g);

}  // namespace rankgrid

#endif  // RANKGRID_CONSTRUCT_HPP_
