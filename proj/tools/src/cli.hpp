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

#ifndef RANKGRID_TOOLS_CLI_HPP_
#define RANKGRID_TOOLS_CLI_HPP_

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rankgrid::cli {

enum ExitCode { kOk = 0, kUsage = 1, kBudget = 2, kInvariant = 3 };

/// Runs the command line `args` (without the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Set asynchronously (SIGINT) to stop a sweep after flushing finished rows.
std::atomic<bool>& interrupt_flag();

/// One row of a sweep over G(m, n) for a range of n.
struct SweepRow {
  int m = 0;
  std::int64_t n = 0;
  std::optional<int> formula;
  std::optional<int> exact_lo, exact_hi;
  std::optional<int> bucket_lo, bucket_hi;
  std::optional<int> alpert, diagonal;
  std::optional<int> cert_labels;
  /// Agreement checks, recomputed from the numbers above by refresh_flags.
  std::map<std::string, bool> flags;
};

/// Recomputes every agreement flag that the row's numbers support.
void refresh_flags(SweepRow& row);

struct SweepOptions {
  int m = 4;
  std::int64_t from = 1, to = 1;
  std::vector<std::string> methods{"formula", "bucket", "bounds"};
  double budget_seconds = 0;
};

/// Computes one row. Unsupported method/instance combinations stay empty.
SweepRow sweep_row(const SweepOptions& options, std::int64_t n);

inline constexpr const char* kSweepCsvHeader =
    "m,n,formula,exact_lo,exact_hi,bucket_lo,bucket_hi,alpert,diagonal,cert_labels,flags";

std::string to_csv(const SweepRow& row);
std::string to_json(const SweepRow& row);
SweepRow sweep_row_from_json(const std::string& text);

}  // namespace rankgrid::cli

#endif  // RANKGRID_TOOLS_CLI_HPP_
