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

#include "rankgrid/bounds.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <mutex>
#include <numeric>

#include "rankgrid/formulas.hpp"
#include "rankgrid/graph.hpp"
#include "rankgrid/solve.hpp"

namespace rankgrid {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw UsageError("rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  num = g == 0 ? 0 : n / g;
  den = g == 0 ? 1 : d / g;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  return static_cast<__int128>(num) * o.den <=> static_cast<__int128>(o.num) * den;
}

namespace {

std::int64_t ceil_half(std::int64_t x) { return (x + 1) / 2; }

int exact_formula(std::int64_t rows, std::int64_t cols) {
  switch (rows) {
    case 1: return rank_path(cols);
    case 2: return rank_2xn(cols);
    case 3: return rank_3xn(cols);
    case 4: return rank_4xn(cols);
  }
  return -1;
}

void require_rows(int m) {
  if (m < 1) throw UsageError("bounds: m must be positive");
}

}  // namespace

int grid_upper_value(int m, std::int64_t w) {
  require_rows(m);
  if (w < 0) throw UsageError("bounds: negative width");
  if (w == 0) return 0;
  if (m <= 4) return exact_formula(m, w);
  if (w <= 4) return exact_formula(w, m);
  return alpert_upper(m, w);
}

int alpert_upper(int m, std::int64_t n) {
  require_rows(m);
  if (n < 1) throw UsageError("alpert_upper: n must be positive");
  if (n == 1) return rank_path(m);
  return m + grid_upper_value(m, ceil_half(n - 1));
}

int tri_bound(int m) {
  if (m < 1) throw UsageError("tri_bound: m must be positive");
  return 2 * m - 2 * (std::bit_width(static_cast<unsigned>(m + 1)) - 1) + 1;
}

std::optional<int> diagonal_upper(int m, std::int64_t n) {
  require_rows(m);
  if (n < m + 2) return std::nullopt;
  return m + tri_bound(m) + grid_upper_value(m, ceil_half(n - m) - 1);
}

double diagonal_threshold(int m) {
  require_rows(m);
  const double mm = m;
  return std::pow(mm + 1, 1.5) * std::pow(mm, 1.0 / (2 * mm)) / (8 * std::sqrt(2.0)) - 1;
}

std::string to_string(Tighter t) {
  switch (t) {
    case Tighter::alpert: return "alpert";
    case Tighter::diagonal: return "diagonal";
    case Tighter::tie: return "tie";
    case Tighter::not_applicable: return "not_applicable";
  }
  return "?";
}

ComparatorReport compare_upper(int m, std::int64_t n) {
  ComparatorReport r;
  r.m = m;
  r.n = n;
  r.alpert = alpert_upper(m, n);
  r.diagonal = diagonal_upper(m, n);
  r.threshold = diagonal_threshold(m);
  if (!r.diagonal) {
    r.tighter = Tighter::not_applicable;
  } else if (*r.diagonal < r.alpert) {
    r.tighter = Tighter::diagonal;
  } else if (*r.diagonal > r.alpert) {
    r.tighter = Tighter::alpert;
  } else {
    r.tighter = Tighter::tie;
  }
  return r;
}

int square_lower(int m) {
  require_rows(m);
  if (m < 5) {
    static std::array<int, 5> exact{};
    static std::mutex mu;
    std::lock_guard lock(mu);
    if (exact[m] == 0) exact[m] = rank_exact(build(GraphShape::grid(m, m))).value();
    return exact[m];
  }
  const int side = static_cast<int>(Rational(2 * std::int64_t{m}, 5).ceil()) - 1;
  return m + square_lower(side);
}

Rational corollary_lower_square(std::int64_t m) { return Rational(15 * m - 25, 9); }

Rational corollary_lower_tri(std::int64_t n) { return Rational(15 * (n / 2) - 34, 9); }

int to_rank_bound(const Rational& r) { return static_cast<int>(std::max<std::int64_t>(1, r.ceil())); }

SubgridFamily subgrid_family(int m, int k) {
  require_rows(m);
  if (k < 1) throw UsageError("subgrid_family: k must be positive");
  SubgridFamily f;
  f.m = m;
  f.k = k;
  f.in_regime = k >= 2 && k <= (m + 2) / 3;
  const int base = static_cast<int>(ceil_half(m - k));
  f.members.emplace_back(m, base);
  for (int t = 0; 2 * k - 3 - 2 * t > 0; ++t) f.members.emplace_back(2 * k - 3 - 2 * t, base + t);
  return f;
}

SquareContainment check_square_containment(int m) {
  if (m < 5) throw UsageError("check_square_containment: m must be at least 5");
  SquareContainment out;
  out.k = (m - 1) / 5 + 2;
  out.target_side = static_cast<int>(Rational(2 * std::int64_t{m}, 5).ceil()) - 1;
  const SubgridFamily f = subgrid_family(m, out.k);
  if (f.members.size() < 2) return out;
  out.dims = f.members[1];
  out.holds = std::min(out.dims.first, out.dims.second) >= out.target_side;
  return out;
}

}  // namespace rankgrid
