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

#include "rankgrid/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>

#include "rankgrid/verify.hpp"

namespace rankgrid {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "rankgrid-cache";

json header() { return {{"format", kFormat}, {"version", kCacheFormatVersion}}; }

}  // namespace

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

std::filesystem::path ResultCache::resolve(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("RANKGRID_CACHE"); env != nullptr && *env != '\0') return env;
  if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg != nullptr && *xdg != '\0') {
    return std::filesystem::path(xdg) / "rankgrid" / "cache.jsonl";
  }
  const char* home = std::getenv("HOME");
  return std::filesystem::path(home != nullptr ? home : ".") / ".local" / "share" / "rankgrid" /
         "cache.jsonl";
}

void ResultCache::load() {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    const std::string where = path_.string() + ":" + std::to_string(number);
    json j = json::parse(line, nullptr, false);
    if (number == 1) {
      if (j.is_discarded() || j.value("format", "") != kFormat ||
          j.value("version", -1) != kCacheFormatVersion) {
        warnings_.push_back(where + ": unrecognized cache header; cache disabled");
        writable_ = false;
        return;
      }
      continue;
    }
    if (j.is_discarded() || !j.is_object()) {
      warnings_.push_back(where + ": corrupt record skipped");
      continue;
    }
    try {
      CacheRecord r;
      r.graph_hash = j.at("graph_hash").get<std::string>();
      r.shape = j.value("shape", "");
      r.lower = j.at("lower").get<int>();
      r.upper = j.at("upper").get<int>();
      if (j.contains("labels") && !j.at("labels").is_null()) {
        r.labels = j.at("labels").get<std::vector<int>>();
      }
      r.solver_version = j.at("solver_version").get<std::string>();
      if (r.lower < 0 || r.lower > r.upper) throw std::invalid_argument("bad interval");
      records_.push_back(std::move(r));
    } catch (const std::exception&) {
      warnings_.push_back(where + ": corrupt record skipped");
    }
  }
}

std::optional<RankResult> ResultCache::lookup(const Graph& g) {
  const std::string hash = g.hash();
  std::optional<RankResult> best;
  for (const CacheRecord& rec : records_) {
    if (rec.graph_hash != hash) continue;
    RankResult r;
    r.lower = rec.lower;
    r.upper = rec.upper;
    if (rec.labels) {
      try {
        Ranking cert(g, *rec.labels);
        if (!is_valid(cert) || cert.label_count() != rec.upper) {
          throw UsageError("certificate does not realize the stored upper bound");
        }
        r.certificate = std::move(cert);
      } catch (const UsageError& e) {
        warnings_.push_back(path_.string() + ": record for " + hash + " rejected (" + e.what() + ")");
        continue;
      }
    }
    const bool tighter = !best || r.upper - r.lower < best->upper - best->lower ||
                         (r.certificate && !best->certificate);
    if (tighter) best = std::move(r);
  }
  return best;
}

bool ResultCache::store(const Graph& g, const RankResult& r) {
  if (!writable_) return false;
  std::error_code ec;
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path(), ec);
  const bool fresh = !std::filesystem::exists(path_, ec) || std::filesystem::file_size(path_, ec) == 0;
  std::ofstream out(path_, std::ios::app);
  if (!out) {
    warnings_.push_back(path_.string() + ": cannot write cache");
    writable_ = false;
    return false;
  }
  if (fresh) out << header().dump() << '\n';
  CacheRecord rec{g.hash(), g.shape() ? g.shape()->name() : "", r.lower, r.upper, std::nullopt,
                  kSolverVersion};
  if (r.certificate) rec.labels = r.certificate->labels();
  json j = {{"graph_hash", rec.graph_hash}, {"shape", rec.shape},  {"lower", rec.lower},
            {"upper", rec.upper},           {"labels", nullptr},   {"solver_version", rec.solver_version}};
  if (rec.labels) j["labels"] = *rec.labels;
  out << j.dump() << '\n';
  records_.push_back(std::move(rec));
  return static_cast<bool>(out);
}

}  // namespace rankgrid
