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

#ifndef RANKGRID_FORMULAS_HPP_
#define RANKGRID_FORMULAS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rankgrid {

/// A value fixed ahead of time, with where it came from ("solver" when the
/// exact solver derived it, "published" when it is a known result).
struct BaseValue {
  int n;
  int value;
  const char* provenance;
};

/// Exact small-width values the recurrences bottom out in.
std::span<const BaseValue> base_table_2xn();
std::span<const BaseValue> base_table_3xn();
std::span<const BaseValue> base_table_4xn();

/// floor(log2 n) + 1. Throws UsageError for n < 1.
int rank_path(std::int64_t n);

/// 2 + r(2, ceil((n-2)/2)) above the base table.
int rank_2xn(std::int64_t n);

/// True iff n = 15*4^k + 7(4^k - 1)/3 + d for some k >= 0 and d in {1, 2}.
bool is_special_3xn(std::int64_t n);

/// 4 + r(3, ceil((n-3)/2)) for special n, 3 + the same otherwise, above the
/// base table.
int rank_3xn(std::int64_t n);

/// 2 * (second most significant bit) + (third most significant bit).
/// Throws UsageError for n < 4.
int b_of(std::int64_t n);

/// Closed form for 4-row grids: the base table for n <= 8; 4k-2 when
/// n = 2^k + 2^(k-2) - 2 or - 1; otherwise 4 floor(log2(n+1)) - 3 + b(n+1).
int rank_4xn(std::int64_t n);

/// Interval structure for 4-row grids: widths in [begin, end) have rank
/// between lower = 4k-4+i and upper = lower + 1.
struct BoundBucket {
  int k = 0;
  int i = 0;
  int lower = 0;
  int upper = 0;
  std::int64_t begin = 0;
  std::int64_t end = 0;
};

/// Boundary B(k, i) of the bucket intervals, 0 <= i <= 4.
std::int64_t bucket_boundary(int k, int i);

/// Bucket containing n, with k = floor(log2(n+3)). Throws UsageError for n < 5.
BoundBucket bucket_4xn(std::int64_t n);

/// True iff n lies in the set that takes the +5 branch of the recursive form,
/// with k = floor(log2(n+3)).
bool in_recursive_plus5_set(std::int64_t n);

/// Recursive form for 4-row grids: 5 + r(ceil((n-4)/2)) inside the +5 set,
/// 4 + r(ceil((n-4)/2)) outside, the base table for n <= 8.
int rank_4xn_recursive(std::int64_t n);

/// Lower recurrence r(4,n) >= 4 + r(4, ceil((n-4)/2)) for n > 5, evaluated
/// with the closed form on the right.
int rank_4xn_lower_recurrence(std::int64_t n);

struct Discrepancy {
  std::int64_t n = 0;
  int closed = 0;
  int recursive = 0;
};

/// Every n in [from, to] where the two forms disagree.
std::vector<Discrepancy> discrepancy_report(std::int64_t from, std::int64_t to);

}  // namespace rankgrid

#endif  // RANKGRID_FORMULAS_HPP_
