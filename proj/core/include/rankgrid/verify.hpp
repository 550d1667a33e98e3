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

#ifndef RANKGRID_VERIFY_HPP_
#define RANKGRID_VERIFY_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "rankgrid/ranking.hpp"

namespace rankgrid {

/// A construction produced a labelling the verifier rejects. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Valid {
  bool operator==(const Valid&) const = default;
};

/// Two vertices sharing label `level`, joined by `path` whose vertices all
/// carry labels <= level. The path starts at `first` and ends at `second`.
struct Violation {
  int level = 0;
  int first = 0;
  int second = 0;
  std::vector<int> path;
};

using ValidationResult = std::variant<Valid, Violation>;

/// Checks the ranking property level by level: for each label c, every
/// connected component of the subgraph induced by labels <= c holds at most
/// one vertex labelled c. O(label_count * (V + E)).
///
/// Throws UsageError if the label array does not match the graph.
ValidationResult validate(const Graph& g, std::span<const int> labels);
ValidationResult validate(const Ranking& r);

inline bool is_valid(const Ranking& r) { return std::holds_alternative<Valid>(validate(r)); }

/// True iff no single label can be lowered without breaking validity.
/// Throws UsageError on an invalid ranking.
bool is_minimal(const Ranking& r);

/// Largest label used more than once, if any. Throws UsageError on an
/// invalid ranking.
std::optional<int> alpha(const Ranking& r);

}  // namespace rankgrid

#endif  // RANKGRID_VERIFY_HPP_
