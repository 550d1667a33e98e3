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

#ifndef RANKGRID_BOUNDS_HPP_
#define RANKGRID_BOUNDS_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rankgrid {

/// Exact fraction with a positive denominator, always reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t ceil() const;
  std::int64_t floor() const;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;
};

/// Best available value (or upper bound) for r(m, w): exact formulas when
/// either side is at most 4, the vertical-cut recursion otherwise. 0 for w = 0.
int grid_upper_value(int m, std::int64_t w);

/// r(m,n) <= m + r(m, ceil((n-1)/2)), unrolled. n = 1 gives rank_path(m).
int alpert_upper(int m, std::int64_t n);

/// Achievable label count of the triangle construction: 2m - 2 floor(log2(m+1)) + 1.
int tri_bound(int m);

/// m + tri_bound(m) + r(m, ceil((n-m)/2) - 1). Empty when n < m + 2.
std::optional<int> diagonal_upper(int m, std::int64_t n);

/// Width below which the diagonal bound is expected to lose:
/// (m+1)^(3/2) * m^(1/(2m)) / (8 sqrt 2) - 1.
double diagonal_threshold(int m);

enum class Tighter { alpert, diagonal, tie, not_applicable };
std::string to_string(Tighter t);

struct ComparatorReport {
  int m = 0;
  std::int64_t n = 0;
  int alpert = 0;
  std::optional<int> diagonal;
  Tighter tighter = Tighter::not_applicable;
  double threshold = 0;
};

ComparatorReport compare_upper(int m, std::int64_t n);

/// Square-grid lower recursion m + r(s, s) with s = ceil(2m/5) - 1 for
/// m >= 5; sides below 5 use exact values from the solver.
int square_lower(int m);

/// (5/3) m - 25/9.
Rational corollary_lower_square(std::int64_t m);

/// (5/3) floor(n/2) - 34/9.
Rational corollary_lower_tri(std::int64_t n);

/// Clamps a fractional lower bound to an integer rank bound (ceiling, >= 1).
int to_rank_bound(const Rational& r);

struct SubgridFamily {
  int m = 0;
  int k = 0;
  /// (rows, cols) pairs: (m, ceil((m-k)/2)) then (2k-3-2t, ceil((m-k)/2)+t).
  std::vector<std::pair<int, int>> members;
  /// False when k lies outside 2 <= k <= floor((m+2)/3).
  bool in_regime = true;
};

SubgridFamily subgrid_family(int m, int k);

struct SquareContainment {
  bool holds = false;
  int k = 0;
  std::pair<int, int> dims;
  int target_side = 0;
};

/// With k = floor((m-1)/5) + 2, checks that the first extension member of
/// the family contains a square of side ceil(2m/5) - 1. Throws for m < 5.
SquareContainment check_square_containment(int m);

}  // namespace rankgrid

#endif  // RANKGRID_BOUNDS_HPP_
