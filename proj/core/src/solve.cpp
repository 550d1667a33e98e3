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

#include "rankgrid/solve.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "rankgrid/verify.hpp"

namespace rankgrid {

std::string to_string(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::brute_force: return "brute_force";
    case Method::formula: return "formula";
    case Method::bound: return "bound";
    case Method::construction: return "construction";
  }
  return "?";
}

std::optional<Method> method_from_string(const std::string& s) {
  for (Method m : {Method::exact, Method::brute_force, Method::formula, Method::bound,
                   Method::construction}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

int RankResult::value() const {
  if (!is_exact()) {
    throw UsageError("rank result is the interval [" + std::to_string(lower) + ", " +
                     std::to_string(upper) + "]");
  }
  return lower;
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Mask bit(int v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

struct BudgetExhausted {};

// Proven facts about one connected vertex set: lb <= rank <= ub, and `best`
// is a separator vertex realizing ub. ub == kUnknown means no ranking found.
struct MemoEntry {
  std::uint8_t lb = 0;
  std::uint8_t ub = kUnknown;
  std::uint8_t best = 0;
  static constexpr std::uint8_t kUnknown = 0xff;
};

// Sharded hash map; each shard has its own lock so worker threads can share
// results. Entries only ever tighten (lb grows, ub shrinks).
class Memo {
 public:
  bool lookup(Mask key, MemoEntry& out) {
    Shard& s = shard(key);
    std::lock_guard lock(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end()) return false;
    out = unpack(it->second);
    return true;
  }

  void raise_lower(Mask key, int lb) {
    Shard& s = shard(key);
    std::lock_guard lock(s.mu);
    auto [it, inserted] = s.map.try_emplace(key, pack(MemoEntry{}));
    if (inserted) size_.fetch_add(1, std::memory_order_relaxed);
    MemoEntry e = unpack(it->second);
    e.lb = std::max<std::uint8_t>(e.lb, static_cast<std::uint8_t>(lb));
    it->second = pack(e);
  }

  void lower_upper(Mask key, int ub, int best) {
    Shard& s = shard(key);
    std::lock_guard lock(s.mu);
    auto [it, inserted] = s.map.try_emplace(key, pack(MemoEntry{}));
    if (inserted) size_.fetch_add(1, std::memory_order_relaxed);
    MemoEntry e = unpack(it->second);
    if (ub < e.ub) {
      e.ub = static_cast<std::uint8_t>(ub);
      e.best = static_cast<std::uint8_t>(best);
    }
    it->second = pack(e);
  }

  std::size_t size() const { return size_.load(std::memory_order_relaxed); }

 private:
  struct Shard {
    std::mutex mu;
    absl::flat_hash_map<Mask, std::uint32_t> map;
  };

  static std::uint32_t pack(MemoEntry e) {
    return std::uint32_t{e.lb} | (std::uint32_t{e.ub} << 8) | (std::uint32_t{e.best} << 16);
  }
  static MemoEntry unpack(std::uint32_t x) {
    return MemoEntry{static_cast<std::uint8_t>(x & 0xff), static_cast<std::uint8_t>((x >> 8) & 0xff),
                     static_cast<std::uint8_t>((x >> 16) & 0xff)};
  }
  Shard& shard(Mask key) { return shards_[(key * 0x9E3779B97F4A7C15ULL) >> 58]; }

  std::array<Shard, 64> shards_;
  std::atomic<std::size_t> size_{0};
};

struct Components {
  std::array<Mask, 64> parts{};
  int count = 0;
};

class Search {
 public:
  Search(const Graph& g, const Budget& budget) : n_(g.vertex_count()), adj_(n_, 0), budget_(budget) {
    for (auto [u, v] : g.edges()) {
      adj_[u] |= bit(v);
      adj_[v] |= bit(u);
    }
    // Centrality: squared distance to the coordinate centroid, scaled by n.
    long long sr = 0, sc = 0;
    for (int v = 0; v < n_; ++v) {
      sr += g.coord(v).row;
      sc += g.coord(v).col;
    }
    centrality_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      long long dr = static_cast<long long>(g.coord(v).row) * n_ - sr;
      long long dc = static_cast<long long>(g.coord(v).col) * n_ - sc;
      centrality_[v] = dr * dr + dc * dc;
    }
    if (budget_.time.count() > 0) deadline_ = Clock::now() + budget_.time;
  }

  Mask all() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }

  Components components(Mask s) const {
    Components out;
    while (s != 0) {
      Mask comp = s & (~s + 1);
      Mask frontier = comp;
      while (frontier != 0) {
        Mask grown = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) grown |= adj_[lowest(f)];
        grown &= s & ~comp;
        comp |= grown;
        frontier = grown;
      }
      out.parts[out.count++] = comp;
      s &= ~comp;
    }
    return out;
  }

  bool is_star(Mask s) const {
    const int size = popcount(s);
    for (Mask f = s; f != 0; f &= f - 1) {
      const int v = lowest(f);
      if (popcount(adj_[v] & s) == size - 1) {
        Mask leaves = s & ~bit(v);
        for (Mask l = leaves; l != 0; l &= l - 1) {
          if ((adj_[lowest(l)] & leaves) != 0) return false;
        }
        return true;
      }
    }
    return false;
  }

  // Vertices of a long path inside s, found greedily (Warnsdorff rule).
  int long_path(Mask s) const {
    int best = 0;
    int tries = 0;
    for (Mask f = s; f != 0 && tries < 4; f &= f - 1) {
      const int start = lowest(f);
      if (popcount(adj_[start] & s) > 2 && tries > 0) continue;
      ++tries;
      Mask visited = bit(start);
      int cur = start;
      int len = 1;
      while (true) {
        Mask next = adj_[cur] & s & ~visited;
        if (next == 0) break;
        int pick = -1;
        int pick_deg = 99;
        for (Mask q = next; q != 0; q &= q - 1) {
          const int w = lowest(q);
          const int d = popcount(adj_[w] & s & ~visited);
          if (d < pick_deg) {
            pick_deg = d;
            pick = w;
          }
        }
        visited |= bit(pick);
        cur = pick;
        ++len;
      }
      best = std::max(best, len);
    }
    return best;
  }

  void order(Mask s, std::array<int, 64>& out, int& count) const {
    count = 0;
    for (Mask f = s; f != 0; f &= f - 1) out[count++] = lowest(f);
    std::array<int, 64> degree{};
    for (int i = 0; i < count; ++i) degree[out[i]] = popcount(adj_[out[i]] & s);
    std::sort(out.begin(), out.begin() + count, [&](int a, int b) {
      if (degree[a] != degree[b]) return degree[a] > degree[b];
      if (centrality_[a] != centrality_[b]) return centrality_[a] < centrality_[b];
      return a < b;
    });
  }

  void tick() {
    if ((calls_.fetch_add(1, std::memory_order_relaxed) & 0x3ff) != 0) return;
    if (stop_.load(std::memory_order_relaxed)) throw BudgetExhausted{};
    if (budget_.cancel != nullptr && budget_.cancel->load(std::memory_order_relaxed)) {
      stop_ = true;
      throw BudgetExhausted{};
    }
    if (budget_.time.count() > 0 && Clock::now() > deadline_) {
      stop_ = true;
      throw BudgetExhausted{};
    }
    if (budget_.max_memo_entries > 0 && memo_.size() > budget_.max_memo_entries) {
      stop_ = true;
      throw BudgetExhausted{};
    }
  }

  // True iff the connected set s has a ranking with at most k labels.
  bool decide(Mask s, int k) {
    const int size = popcount(s);
    if (k >= size) return true;
    if (k <= 1) return false;
    if (k == 2) return is_star(s);

    MemoEntry e;
    if (memo_.lookup(s, e)) {
      if (e.lb > k) return false;
      if (e.ub <= k) return true;
    }
    tick();
    if (size >= (1 << k) && long_path(s) >= (1 << k)) {
      memo_.raise_lower(s, k + 1);
      return false;
    }

    std::array<int, 64> candidates_in_order;
    int count = 0;
    order(s, candidates_in_order, count);
    Mask candidates = s;
    for (int i = 0; i < count; ++i) {
      const int v = candidates_in_order[i];
      if ((candidates & bit(v)) == 0) continue;
      Mask failed = try_root(s, v, k);
      if (failed == 0) {
        memo_.lower_upper(s, k, v);
        return true;
      }
      candidates &= failed;
      if (candidates == 0) break;
    }
    memo_.raise_lower(s, k + 1);
    return false;
  }

  // Returns 0 if every component of s - v ranks within k - 1 labels,
  // otherwise the component that does not.
  Mask try_root(Mask s, int v, int k) {
    Components comps = components(s & ~bit(v));
    std::sort(comps.parts.begin(), comps.parts.begin() + comps.count,
              [](Mask a, Mask b) { return popcount(a) > popcount(b); });
    for (int i = 0; i < comps.count; ++i) {
      if (!decide(comps.parts[i], k - 1)) return comps.parts[i];
    }
    return 0;
  }

  // Parallel variant of decide() for the root set.
  bool decide_root(Mask s, int k, int jobs) {
    if (jobs <= 1) return decide(s, k);
    const int size = popcount(s);
    if (k >= size) return true;
    if (k <= 2) return decide(s, k);
    MemoEntry e;
    if (memo_.lookup(s, e)) {
      if (e.lb > k) return false;
      if (e.ub <= k) return true;
    }
    std::array<int, 64> ordered;
    int count = 0;
    order(s, ordered, count);
    std::atomic<Mask> candidates{s};
    std::atomic<int> next{0};
    std::atomic<int> found{-1};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
      try {
        while (found.load() < 0) {
          const int i = next.fetch_add(1);
          if (i >= count) return;
          const int v = ordered[i];
          if ((candidates.load() & bit(v)) == 0) continue;
          Mask failed = try_root(s, v, k);
          if (failed == 0) {
            int expected = -1;
            found.compare_exchange_strong(expected, v);
            return;
          }
          candidates.fetch_and(failed);
        }
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        stop_ = true;
      }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (found.load() >= 0) {
      memo_.lower_upper(s, k, found.load());
      return true;
    }
    if (error) std::rethrow_exception(error);
    memo_.raise_lower(s, k + 1);
    return false;
  }

  // Writes a ranking of s with labels <= k, given decide(s, k) holds.
  void extract(Mask s, int k, std::vector<int>& labels) {
    const int size = popcount(s);
    MemoEntry e;
    const bool known = memo_.lookup(s, e) && e.ub <= k;
    if (!known) {
      if (size <= k) {
        // Distinct labels; pick the smallest count that still decides true.
        int label = size;
        for (Mask f = s; f != 0; f &= f - 1) labels[lowest(f)] = label--;
        return;
      }
      if (k >= 2 && is_star(s)) {
        for (Mask f = s; f != 0; f &= f - 1) {
          const int v = lowest(f);
          labels[v] = popcount(adj_[v] & s) == size - 1 ? 2 : 1;
        }
        // Two-vertex stars have both endpoints adjacent to everything.
        if (size == 2) labels[lowest(s)] = 1;
        return;
      }
      throw std::logic_error("solver: extract called on an undecided set");
    }
    const int v = e.best;
    labels[v] = e.ub;
    Components comps = components(s & ~bit(v));
    for (int i = 0; i < comps.count; ++i) {
      Mask c = comps.parts[i];
      // Children were proven at ub - 1; re-derive the tightest stored bound.
      if (!decide(c, e.ub - 1)) throw std::logic_error("solver: memo inconsistent");
      extract(c, e.ub - 1, labels);
    }
  }

  Memo& memo() { return memo_; }
  int size() const { return n_; }

 private:
  int n_;
  std::vector<Mask> adj_;
  std::vector<long long> centrality_;
  Budget budget_;
  Clock::time_point deadline_{};
  Memo memo_;
  std::atomic<std::uint64_t> calls_{0};
  std::atomic<bool> stop_{false};
};

int effective_jobs(const SolveOptions& o) {
  if (o.deterministic) return 1;
  return std::max(1, o.jobs);
}

void check_solvable(const Graph& g) {
  if (g.vertex_count() == 0) throw UsageError("solver: empty graph");
  if (g.vertex_count() > kMaxSolverVertices) {
    throw UsageError("solver: graphs above " + std::to_string(kMaxSolverVertices) +
                     " vertices are not supported");
  }
}

void check_budget(const Budget& b) {
  if (b.time.count() < 0) throw UsageError("solver: negative time budget");
}

// Labels of a ranking of the whole graph restricted to the vertices of `part`.
int max_label_on(const std::vector<int>& labels, Mask part) {
  int top = 0;
  for (Mask f = part; f != 0; f &= f - 1) top = std::max(top, labels[lowest(f)]);
  return top;
}

}  // namespace

Ranking heuristic_ranking(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> labels(n, 0);
  // Centrality relative to the whole graph breaks ties.
  double cr = 0, cc = 0;
  for (auto c : g.coords()) {
    cr += c.row;
    cc += c.col;
  }
  if (n > 0) {
    cr /= n;
    cc /= n;
  }
  auto central = [&](int v) {
    double dr = g.coord(v).row - cr, dc = g.coord(v).col - cc;
    return dr * dr + dc * dc;
  };

  std::vector<char> alive(n, 1);
  auto comps_of = [&](const std::vector<int>& verts, int removed) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(n, 0);
    std::vector<char> in(n, 0);
    for (int v : verts) in[v] = 1;
    if (removed >= 0) in[removed] = 0;
    for (int s : verts) {
      if (!in[s] || seen[s]) continue;
      std::vector<int> c{s};
      seen[s] = 1;
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (int w : g.neighbors(c[i])) {
          if (in[w] && !seen[w]) {
            seen[w] = 1;
            c.push_back(w);
          }
        }
      }
      out.push_back(std::move(c));
    }
    return out;
  };

  // Returns the number of labels used for `verts` (connected).
  auto rank = [&](auto&& self, const std::vector<int>& verts) -> int {
    if (verts.size() == 1) {
      labels[verts[0]] = 1;
      return 1;
    }
    int best_v = -1;
    std::size_t best_max = verts.size() + 1;
    double best_c = 0;
    for (int v : verts) {
      std::size_t worst = 0;
      for (auto& c : comps_of(verts, v)) worst = std::max(worst, c.size());
      const double cv = central(v);
      if (worst < best_max || (worst == best_max && cv < best_c)) {
        best_max = worst;
        best_v = v;
        best_c = cv;
      }
    }
    int top = 0;
    for (auto& c : comps_of(verts, best_v)) top = std::max(top, self(self, c));
    labels[best_v] = top + 1;
    return top + 1;
  };

  for (auto& comp : g.components()) rank(rank, comp);
  return Ranking(g, std::move(labels));
}

int path_lower_bound(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  int best = 1;
  const int n = g.vertex_count();
  std::vector<char> visited(n);
  for (int start = 0; start < n; ++start) {
    if (g.neighbors(start).size() > 2 && start > 0) continue;
    std::fill(visited.begin(), visited.end(), 0);
    visited[start] = 1;
    int cur = start, len = 1;
    while (true) {
      int pick = -1, pick_deg = 1 << 30;
      for (int w : g.neighbors(cur)) {
        if (visited[w]) continue;
        int d = 0;
        for (int x : g.neighbors(w)) d += visited[x] ? 0 : 1;
        if (d < pick_deg) {
          pick_deg = d;
          pick = w;
        }
      }
      if (pick < 0) break;
      visited[pick] = 1;
      cur = pick;
      ++len;
    }
    best = std::max(best, len);
  }
  return std::bit_width(static_cast<unsigned>(best));
}

RankResult rank_exact(const Graph& g, const SolveOptions& options) {
  check_solvable(g);
  check_budget(options.budget);
  const auto started = Clock::now();
  const int jobs = effective_jobs(options);

  std::optional<Ranking> seed;
  if (options.seed) {
    if (!(options.seed->graph() == g)) throw UsageError("solver: seed ranking is for another graph");
    if (is_valid(*options.seed)) seed = options.seed;
  }
  Ranking heuristic = heuristic_ranking(g);
  const Ranking& upper_cert =
      (seed && seed->label_count() < heuristic.label_count()) ? *seed : heuristic;

  Search search(g, options.budget);
  std::vector<int> labels(g.vertex_count(), 0);
  RankResult result;
  result.method = Method::exact;

  for (const auto& comp : g.components()) {
    Mask s = 0;
    for (int v : comp) s |= bit(v);
    Graph piece = g.induced(comp);
    const int ub = max_label_on(upper_cert.labels(), s);
    int lb = std::min(ub, path_lower_bound(piece));
    int value = ub;
    try {
      for (int k = lb; k < ub; ++k) {
        if (search.decide_root(s, k, jobs)) {
          value = k;
          break;
        }
        lb = k + 1;
      }
    } catch (const BudgetExhausted&) {
      result.budget_exhausted = true;
    }
    if (result.budget_exhausted) {
      result.lower = std::max(result.lower, lb);
      result.upper = std::max(result.upper, ub);
      for (int v : comp) labels[v] = upper_cert.label(v);
      // Remaining components are only bracketed by the cheap bounds.
      continue;
    }
    if (value == ub) {
      for (int v : comp) labels[v] = upper_cert.label(v);
      // Shift so the certificate uses exactly `value` labels on this part.
    } else {
      search.extract(s, value, labels);
    }
    result.lower = std::max(result.lower, value);
    result.upper = std::max(result.upper, value);
  }

  result.certificate = Ranking(g, std::move(labels));
  result.memo_entries = search.memo().size();
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
  return result;
}

DecisionResult rank_decision(const Graph& g, int k, const SolveOptions& options) {
  check_solvable(g);
  check_budget(options.budget);
  if (k < 1) throw UsageError("rank_decision: k must be positive");
  const auto started = Clock::now();
  DecisionResult out;
  Search search(g, options.budget);
  std::vector<int> labels(g.vertex_count(), 0);
  try {
    for (const auto& comp : g.components()) {
      Mask s = 0;
      for (int v : comp) s |= bit(v);
      if (!search.decide_root(s, k, effective_jobs(options))) {
        out.outcome = DecisionOutcome::infeasible;
        out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
        return out;
      }
      search.extract(s, k, labels);
    }
    out.outcome = DecisionOutcome::found;
    out.ranking = Ranking(g, std::move(labels));
  } catch (const BudgetExhausted&) {
    out.outcome = DecisionOutcome::unknown;
    out.budget_exhausted = true;
  }
  out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
  return out;
}

RankResult brute_force(const Graph& g, int vertex_cap) {
  const int n = g.vertex_count();
  if (n == 0) throw UsageError("brute_force: empty graph");
  if (n > vertex_cap) {
    throw UsageError("brute_force: " + std::to_string(n) + " vertices exceeds the cap of " +
                     std::to_string(vertex_cap));
  }
  const auto started = Clock::now();
  std::vector<int> labels(n, 0);
  for (int lambda = 1; lambda <= n; ++lambda) {
    // Depth-first enumeration of labellings in [1, lambda]^n; adjacent equal
    // labels are skipped early since no ranking allows them.
    bool found = false;
    auto assign = [&](auto&& self, int v) -> void {
      if (found) return;
      if (v == n) {
        if (std::holds_alternative<Valid>(validate(g, labels))) found = true;
        return;
      }
      for (int l = 1; l <= lambda && !found; ++l) {
        bool clash = false;
        for (int w : g.neighbors(v)) {
          if (w < v && labels[w] == l) {
            clash = true;
            break;
          }
        }
        if (clash) continue;
        labels[v] = l;
        self(self, v + 1);
      }
    };
    assign(assign, 0);
    if (found) {
      RankResult r;
      r.lower = r.upper = lambda;
      r.method = Method::brute_force;
      r.certificate = Ranking(g, labels);
      r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
      return r;
    }
  }
  throw std::logic_error("brute_force: distinct labels always form a ranking");
}

}  // namespace rankgrid
