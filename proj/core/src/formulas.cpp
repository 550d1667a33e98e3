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

#include "rankgrid/formulas.hpp"

#include <array>
#include <bit>

#include "rankgrid/ranking.hpp"

namespace rankgrid {

namespace {

// Values below were produced by rank_exact and are re-checked by the tests.
constexpr std::array<BaseValue, 3> kBase2{{
    {1, 2, "solver"},
    {2, 3, "solver"},
    {3, 4, "solver"},
}};

constexpr std::array<BaseValue, 5> kBase3{{
    {1, 2, "solver"},
    {2, 4, "solver"},
    {3, 5, "solver"},
    {4, 6, "solver"},
    {5, 6, "solver"},
}};

constexpr std::array<BaseValue, 8> kBase4{{
    {1, 3, "solver"},
    {2, 4, "solver"},
    {3, 6, "published"},
    {4, 7, "published"},
    {5, 8, "published"},
    {6, 8, "published"},
    {7, 9, "published"},
    {8, 10, "published"},
}};

int floor_log2(std::int64_t n) { return std::bit_width(static_cast<std::uint64_t>(n)) - 1; }

std::int64_t ceil_half(std::int64_t x) { return (x + 1) / 2; }

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw UsageError(std::string(what) + ": n must be positive");
}

}  // namespace

std::span<const BaseValue> base_table_2xn() { return kBase2; }
std::span<const BaseValue> base_table_3xn() { return kBase3; }
std::span<const BaseValue> base_table_4xn() { return kBase4; }

int rank_path(std::int64_t n) {
  require_positive(n, "rank_path");
  return floor_log2(n) + 1;
}

int rank_2xn(std::int64_t n) {
  require_positive(n, "rank_2xn");
  if (n <= static_cast<std::int64_t>(kBase2.size())) return kBase2[n - 1].value;
  return 2 + rank_2xn(ceil_half(n - 2));
}

bool is_special_3xn(std::int64_t n) {
  // 15*4^k + 7(4^k - 1)/3 = (52*4^k - 7)/3
  for (std::int64_t p = 1; (52 * p - 7) / 3 + 1 <= n; p *= 4) {
    const std::int64_t base = (52 * p - 7) / 3;
    if (n == base + 1 || n == base + 2) return true;
  }
  return false;
}

int rank_3xn(std::int64_t n) {
  require_positive(n, "rank_3xn");
  if (n <= static_cast<std::int64_t>(kBase3.size())) return kBase3[n - 1].value;
  return (is_special_3xn(n) ? 4 : 3) + rank_3xn(ceil_half(n - 3));
}

int b_of(std::int64_t n) {
  if (n < 4) throw UsageError("b_of: n must be at least 4");
  const int top = floor_log2(n);
  const int second = static_cast<int>((n >> (top - 1)) & 1);
  const int third = static_cast<int>((n >> (top - 2)) & 1);
  return 2 * second + third;
}

int rank_4xn(std::int64_t n) {
  require_positive(n, "rank_4xn");
  if (n <= 8) return kBase4[n - 1].value;
  for (int k = 3; (std::int64_t{1} << k) <= n + 2; ++k) {
    const std::int64_t s = (std::int64_t{1} << k) + (std::int64_t{1} << (k - 2));
    if (n == s - 2 || n == s - 1) return 4 * k - 2;
  }
  return 4 * floor_log2(n + 1) - 3 + b_of(n + 1);
}

std::int64_t bucket_boundary(int k, int i) {
  const std::int64_t p = std::int64_t{1} << k;
  switch (i) {
    case 0: return p - 3;
    case 1: return p + p / 4 - 3;
    case 2: return p + p / 2 - 3;
    case 3: return p + p / 2 + p / 4 - 3;
    case 4: return 2 * p - 3;
  }
  throw UsageError("bucket_boundary: i must be in 0..4");
}

BoundBucket bucket_4xn(std::int64_t n) {
  if (n < 5) throw UsageError("bucket_4xn: n must be at least 5");
  BoundBucket b;
  b.k = floor_log2(n + 3);
  for (int i = 0; i < 4; ++i) {
    if (n >= bucket_boundary(b.k, i) && n < bucket_boundary(b.k, i + 1)) b.i = i;
  }
  b.lower = 4 * b.k - 4 + b.i;
  b.upper = b.lower + 1;
  b.begin = bucket_boundary(b.k, b.i);
  b.end = bucket_boundary(b.k, b.i + 1);
  return b;
}

bool in_recursive_plus5_set(std::int64_t n) {
  if (n < 1) return false;
  const int k = floor_log2(n + 3);
  if (k < 2) return false;
  const std::int64_t p = std::int64_t{1} << k;
  if (n >= p - 1 && n <= p) return true;
  if (n == p + p / 2 - 2) return true;
  const std::int64_t q = p + p / 2 + p / 4;
  return n >= q - 1 && n <= q;
}

int rank_4xn_recursive(std::int64_t n) {
  require_positive(n, "rank_4xn_recursive");
  if (n <= 8) return kBase4[n - 1].value;
  return (in_recursive_plus5_set(n) ? 5 : 4) + rank_4xn_recursive(ceil_half(n - 4));
}

int rank_4xn_lower_recurrence(std::int64_t n) {
  if (n <= 5) throw UsageError("rank_4xn_lower_recurrence: n must exceed 5");
  return 4 + rank_4xn(ceil_half(n - 4));
}

std::vector<Discrepancy> discrepancy_report(std::int64_t from, std::int64_t to) {
  require_positive(from, "discrepancy_report");
  std::vector<Discrepancy> out;
  for (std::int64_t n = from; n <= to; ++n) {
    const int closed = rank_4xn(n);
    const int recursive = rank_4xn_recursive(n);
    if (closed != recursive) out.push_back({n, closed, recursive});
  }
  return out;
}

}  // namespace rankgrid
