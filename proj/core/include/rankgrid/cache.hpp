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

#ifndef RANKGRID_CACHE_HPP_
#define RANKGRID_CACHE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rankgrid/solve.hpp"

namespace rankgrid {

inline constexpr int kCacheFormatVersion = 1;

struct CacheRecord {
  std::string graph_hash;
  std::string shape;  // display name, empty for shapeless graphs
  int lower = 0;
  int upper = 0;
  std::optional<std::vector<int>> labels;
  std::string solver_version;
};

/// Append-only JSON-lines store of solver results keyed by graph hash.
///
/// The first line is a header {"format":"rankgrid-cache","version":N}.
/// Unreadable lines are skipped and reported through warnings(). A file
/// with a foreign header is left untouched: nothing is read or appended.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path);

  /// --cache flag, then $RANKGRID_CACHE, then $XDG_DATA_HOME/rankgrid/
  /// cache.jsonl, then ~/.local/share/rankgrid/cache.jsonl.
  static std::filesystem::path resolve(const std::optional<std::string>& flag);

  const std::filesystem::path& path() const { return path_; }
  const std::vector<CacheRecord>& records() const { return records_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  bool writable() const { return writable_; }

  /// Tightest stored result for `g`. Certificates are re-validated; a
  /// record whose certificate fails is skipped with a warning.
  std::optional<RankResult> lookup(const Graph& g);

  /// Appends a record. Returns false (with a warning) when the file cannot
  /// be written.
  bool store(const Graph& g, const RankResult& r);

 private:
  void load();

  std::filesystem::path path_;
  std::vector<CacheRecord> records_;
  std::vector<std::string> warnings_;
  bool writable_ = true;
};

}  // namespace rankgrid

#endif  // RANKGRID_CACHE_HPP_
