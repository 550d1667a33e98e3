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

#include <algorithm>
#include <json.hpp>

#include "cli.hpp"
#include "rankgrid/bounds.hpp"
#include "rankgrid/construct.hpp"
#include "rankgrid/formulas.hpp"
#include "rankgrid/solve.hpp"

namespace rankgrid::cli {

using nlohmann::json;

namespace {

bool wants(const SweepOptions& o, const std::string& method) {
  return std::find(o.methods.begin(), o.methods.end(), method) != o.methods.end();
}

std::optional<int> formula_value(int m, std::int64_t n) {
  switch (m) {
    case 1: return rank_path(n);
    case 2: return rank_2xn(n);
    case 3: return rank_3xn(n);
    case 4: return rank_4xn(n);
    default: return std::nullopt;
  }
}

std::string cell(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

json opt_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::optional<int> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<int>();
}

}  // namespace

void refresh_flags(SweepRow& row) {
  row.flags.clear();
  const bool exact_known = row.exact_lo && row.exact_hi;
  if (row.formula && exact_known) {
    row.flags["formula_matches_exact"] =
        *row.exact_lo == *row.exact_hi ? *row.formula == *row.exact_lo
                                       : *row.exact_lo <= *row.formula && *row.formula <= *row.exact_hi;
  }
  if (row.formula && row.bucket_lo && row.bucket_hi) {
    row.flags["bucket_brackets_formula"] = *row.bucket_lo <= *row.formula && *row.formula <= *row.bucket_hi;
  }
  const std::optional<int> truth = exact_known && *row.exact_lo == *row.exact_hi ? row.exact_lo : row.formula;
  if (truth && (row.alpert || row.diagonal)) {
    row.flags["upper_bounds_hold"] = (!row.alpert || *row.alpert >= *truth) &&
                                     (!row.diagonal || *row.diagonal >= *truth);
  }
  if (row.cert_labels && truth) row.flags["certificate_within_formula"] = *row.cert_labels <= *truth;
}

SweepRow sweep_row(const SweepOptions& o, std::int64_t n) {
  SweepRow row;
  row.m = o.m;
  row.n = n;
  if (wants(o, "formula")) row.formula = formula_value(o.m, n);
  if (wants(o, "bucket") && o.m == 4 && n > 8) {
    const BoundBucket b = bucket_4xn(n);
    row.bucket_lo = b.lower;
    row.bucket_hi = b.upper;
  }
  if (wants(o, "bounds")) {
    row.alpert = alpert_upper(o.m, n);
    row.diagonal = diagonal_upper(o.m, n);
  }
  if (wants(o, "exact") && static_cast<std::int64_t>(o.m) * n <= kMaxSolverVertices) {
    SolveOptions so;
    so.budget.time = std::chrono::milliseconds(static_cast<long long>(o.budget_seconds * 1000));
    so.budget.cancel = &interrupt_flag();
    so.deterministic = true;
    const RankResult r = rank_exact(build(GraphShape::grid(o.m, static_cast<int>(n))), so);
    row.exact_lo = r.lower;
    row.exact_hi = r.upper;
  }
  if (wants(o, "construct") && n <= 2045) {
    row.cert_labels = grid_certificate(o.m, static_cast<int>(n)).labels();
  }
  refresh_flags(row);
  return row;
}

std::string to_csv(const SweepRow& row) {
  std::string flags;
  for (const auto& [name, ok] : row.flags) {
    if (!flags.empty()) flags += ';';
    flags += name + "=" + (ok ? "1" : "0");
  }
  return std::to_string(row.m) + "," + std::to_string(row.n) + "," + cell(row.formula) + "," +
         cell(row.exact_lo) + "," + cell(row.exact_hi) + "," + cell(row.bucket_lo) + "," +
         cell(row.bucket_hi) + "," + cell(row.alpert) + "," + cell(row.diagonal) + "," +
         cell(row.cert_labels) + "," + flags;
}

std::string to_json(const SweepRow& row) {
  return json{{"m", row.m},
              {"n", row.n},
              {"formula", opt_json(row.formula)},
              {"exact_lo", opt_json(row.exact_lo)},
              {"exact_hi", opt_json(row.exact_hi)},
              {"bucket_lo", opt_json(row.bucket_lo)},
              {"bucket_hi", opt_json(row.bucket_hi)},
              {"alpert", opt_json(row.alpert)},
              {"diagonal", opt_json(row.diagonal)},
              {"cert_labels", opt_json(row.cert_labels)},
              {"flags", row.flags}}
      .dump();
}

SweepRow sweep_row_from_json(const std::string& text) {
  const json j = json::parse(text);
  SweepRow row;
  row.m = j.at("m").get<int>();
  row.n = j.at("n").get<std::int64_t>();
  row.formula = opt_from(j, "formula");
  row.exact_lo = opt_from(j, "exact_lo");
  row.exact_hi = opt_from(j, "exact_hi");
  row.bucket_lo = opt_from(j, "bucket_lo");
  row.bucket_hi = opt_from(j, "bucket_hi");
  row.alpert = opt_from(j, "alpert");
  row.diagonal = opt_from(j, "diagonal");
  row.cert_labels = opt_from(j, "cert_labels");
  refresh_flags(row);
  return row;
}

}  // namespace rankgrid::cli
