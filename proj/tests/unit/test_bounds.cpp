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


#include <doctest.h>

#include <algorithm>

#include "rankgrid/bounds.hpp"
#include "rankgrid/formulas.hpp"
#include "rankgrid/solve.hpp"

using namespace rankgrid;

TEST_CASE("rationals") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(-3, 2).ceil() == -1);
  CHECK(Rational(-3, 2).floor() == -2);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(125, 9).to_string() == "125/9");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), UsageError);
}

TEST_CASE("alpert bound") {
  for (int n = 1; n <= 40; ++n) CHECK(alpert_upper(1, n) == rank_path(n));
  CHECK(alpert_upper(4, 9) == 11);
  CHECK(alpert_upper(3, 7) == 3 + rank_3xn(3));
  CHECK(alpert_upper(5, 1) == rank_path(5));
}

TEST_CASE("diagonal bound") {
  CHECK(tri_bound(4) == 5);
  CHECK(tri_bound(5) == 7);
  CHECK(diagonal_upper(4, 20) == 18);
  CHECK(diagonal_upper(5, 20) == 5 + 7 + grid_upper_value(5, 7));
  CHECK_FALSE(diagonal_upper(4, 5).has_value());
}

TEST_CASE("upper bounds never undercut the four-row formula") {
  for (int64_t n = 1; n <= 2000; ++n) {
    CHECK(alpert_upper(4, n) >= rank_4xn(n));
    if (auto d = diagonal_upper(4, n)) CHECK(*d >= rank_4xn(n));
  }
}

TEST_CASE("comparator") {
  CHECK(diagonal_threshold(4) == doctest::Approx(0.175).epsilon(0.01));
  CHECK(diagonal_threshold(100) == doctest::Approx(90.8).epsilon(0.005));
  ComparatorReport p = compare_upper(1, 7);
  CHECK(p.alpert == rank_path(7));
  REQUIRE(p.diagonal.has_value());
  CHECK(p.tighter == (*p.diagonal < p.alpert ? Tighter::diagonal
                      : *p.diagonal > p.alpert ? Tighter::alpert
                                               : Tighter::tie));
  CHECK(compare_upper(4, 5).tighter == Tighter::not_applicable);
  CHECK(compare_upper(4, 20).tighter == Tighter::alpert);
  CHECK(to_string(Tighter::tie) == "tie");
}

TEST_CASE("square lower recursion") {
  CHECK(square_lower(5) == 6);
  CHECK(square_lower(10) == 10 + rank_exact(build(GraphShape::grid(3, 3))).value());
  CHECK(square_lower(25) == 25 + 9 + rank_exact(build(GraphShape::grid(3, 3))).value());
}

TEST_CASE("square bounds sandwich the exact values") {
  for (int s = 1; s <= 5; ++s) {
    const int value = rank_exact(build(GraphShape::grid(s, s))).value();
    CHECK(square_lower(s) <= value);
    int upper = alpert_upper(s, s);
    if (auto d = diagonal_upper(s, s)) upper = std::min(upper, *d);
    CHECK(value <= upper);
  }
}

TEST_CASE("corollary values") {
  CHECK(corollary_lower_square(10) == Rational(125, 9));
  CHECK(corollary_lower_tri(11) == Rational(41, 9));
  CHECK(corollary_lower_tri(2).num < 0);
  CHECK(to_rank_bound(corollary_lower_tri(2)) == 1);
  CHECK(to_rank_bound(Rational(125, 9)) == 14);
}

TEST_CASE("subgrid families") {
  using Dims = std::vector<std::pair<int, int>>;
  CHECK(subgrid_family(10, 4).members == Dims{{10, 3}, {5, 3}, {3, 4}, {1, 5}});
  CHECK(subgrid_family(5, 2).members == Dims{{5, 2}, {1, 2}});
  CHECK(subgrid_family(10, 2).members == Dims{{10, 4}, {1, 4}});
  CHECK(subgrid_family(10, 4).in_regime);
  CHECK_FALSE(subgrid_family(10, 5).in_regime);
  for (int m = 5; m <= 60; ++m) {
    for (int k = 2; k <= (m + 2) / 3; ++k) {
      const auto members = subgrid_family(m, k).members;
      for (std::size_t i = 0; i < members.size(); ++i) {
        CHECK(members[i].first > 0);
        CHECK(members[i].second > 0);
        if (i >= 2) {
          CHECK(members[i].first == members[i - 1].first - 2);
          CHECK(members[i].second == members[i - 1].second + 1);
        }
      }
    }
  }
}

TEST_CASE("square containment") {
  SquareContainment c = check_square_containment(13);
  CHECK(c.holds);
  CHECK(c.dims == std::pair{5, 5});
  CHECK(c.target_side == 5);
  c = check_square_containment(11);
  CHECK(c.holds);
  CHECK(c.dims == std::pair{5, 4});
  CHECK(c.target_side == 4);
  c = check_square_containment(15);
  CHECK(c.holds);
  CHECK(c.dims == std::pair{5, 6});
  CHECK(c.target_side == 5);
  CHECK_THROWS_AS(check_square_containment(4), UsageError);
  for (int m = 5; m <= 2000; ++m) CHECK(check_square_containment(m).holds);
}
