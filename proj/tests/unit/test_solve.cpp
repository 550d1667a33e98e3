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

#include <random>

#include "corpus.hpp"
#include "rankgrid/solve.hpp"
#include "rankgrid/verify.hpp"

using namespace rankgrid;

namespace {

int exact(const GraphShape& s) { return rank_exact(build(s)).value(); }

void check_certificate(const Graph& g, const RankResult& r) {
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->graph() == g);
  CHECK(is_valid(*r.certificate));
  CHECK(r.certificate->label_count() == r.upper);
}

}  // namespace

TEST_CASE("exact examples") {
  CHECK(exact(GraphShape::grid(4, 4)) == 7);
  CHECK(exact(GraphShape::grid(4, 6)) == 8);
  CHECK(exact(GraphShape::path(8)) == 4);
  CHECK(exact(GraphShape::grid(2, 2)) == 3);
  CHECK(exact(GraphShape::grid(3, 3)) == 5);
  CHECK(exact(GraphShape::grid(1, 1)) == 1);
}

TEST_CASE("exact results carry minimal certificates") {
  for (auto s : {GraphShape::grid(3, 4), GraphShape::grid(4, 3), GraphShape::triangle(4), GraphShape::path(13)}) {
    Graph g = build(s);
    RankResult r = rank_exact(g);
    CHECK(r.is_exact());
    CHECK_FALSE(r.budget_exhausted);
    CHECK(r.method == Method::exact);
    check_certificate(g, r);
    CHECK(rank_decision(g, r.value() - 1).outcome == DecisionOutcome::infeasible);
    CHECK(rank_decision(g, r.value()).outcome == DecisionOutcome::found);
  }
}

TEST_CASE("decision examples") {
  GraphShape two = GraphShape::grid(4, 2);
  two.with(StickyEnd{Side::left}).with(StickyEnd{Side::right});
  auto found = rank_decision(build(two), 6);
  REQUIRE(found.outcome == DecisionOutcome::found);
  CHECK(is_valid(*found.ranking));
  CHECK(found.ranking->label_count() <= 6);
  CHECK(rank_decision(build(GraphShape::path(4)), 2).outcome == DecisionOutcome::infeasible);
  GraphShape corners = GraphShape::grid(4, 3);
  corners.with(RemoveCorner{Corner::NW}).with(RemoveCorner{Corner::NE});
  auto five = rank_decision(build(corners), 5);
  REQUIRE(five.outcome == DecisionOutcome::found);
  CHECK(is_valid(*five.ranking));
  CHECK_THROWS_AS(rank_decision(build(GraphShape::path(3)), 0), UsageError);
}

TEST_CASE("brute force examples") {
  CHECK(brute_force(build(GraphShape::triangle(2))).value() == 3);
  CHECK(brute_force(build(GraphShape::path(7))).value() == 3);
  CHECK(brute_force(build(GraphShape::path(1))).value() == 1);
  CHECK(brute_force(build(GraphShape::path(1))).method == Method::brute_force);
  CHECK_THROWS_AS(brute_force(build(GraphShape::path(9))), UsageError);
}

TEST_CASE("solver matches brute force on a random sample") {
  for (const Graph& g : testing::corpus(60, 1, 8, 99)) {
    RankResult fast = rank_exact(g);
    RankResult slow = brute_force(g);
    CHECK(fast.value() == slow.value());
    check_certificate(g, fast);
    check_certificate(g, slow);
  }
}

TEST_CASE("disconnected graphs take the maximum over components") {
  Graph g(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}}, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {1, 3}});
  RankResult r = rank_exact(g);
  CHECK(r.value() == 3);
  check_certificate(g, r);
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(rank_exact(Graph()), UsageError);
  CHECK_THROWS_AS(rank_exact(build(GraphShape::grid(5, 13))), UsageError);
  SolveOptions bad;
  bad.budget.time = std::chrono::milliseconds(-1);
  CHECK_THROWS_AS(rank_exact(build(GraphShape::path(3)), bad), UsageError);
  SolveOptions seeded;
  seeded.seed = Ranking(build(GraphShape::path(4)), {1, 2, 1, 3});
  CHECK_THROWS_AS(rank_exact(build(GraphShape::path(3)), seeded), UsageError);
  RankResult interval;
  interval.lower = 2;
  interval.upper = 3;
  CHECK_THROWS_AS(interval.value(), UsageError);
}

TEST_CASE("budget exhaustion returns a sound interval") {
  Graph g = build(GraphShape::grid(6, 6));
  SolveOptions o;
  o.budget.time = std::chrono::milliseconds(50);
  RankResult r = rank_exact(g, o);
  CHECK(r.budget_exhausted);
  CHECK(r.lower <= 11);
  CHECK(r.upper >= 11);
  check_certificate(g, r);

  SolveOptions memo;
  memo.budget.max_memo_entries = 100;
  RankResult m = rank_exact(g, memo);
  CHECK(m.budget_exhausted);
  CHECK(m.lower <= m.upper);

  std::atomic<bool> stop{true};
  SolveOptions cancelled;
  cancelled.budget.cancel = &stop;
  CHECK(rank_exact(g, cancelled).budget_exhausted);
  CHECK(rank_decision(g, 11, cancelled).outcome == DecisionOutcome::unknown);
}

TEST_CASE("seed rankings bound the search") {
  Graph g = build(GraphShape::grid(3, 5));
  SolveOptions o;
  o.seed = heuristic_ranking(g);
  RankResult r = rank_exact(g, o);
  CHECK(r.value() == rank_exact(g).value());
  check_certificate(g, r);
}

TEST_CASE("parallel and sequential searches agree") {
  for (auto s : {GraphShape::grid(4, 5), GraphShape::grid(3, 6), GraphShape::triangle(5)}) {
    Graph g = build(s);
    SolveOptions par;
    par.jobs = 4;
    SolveOptions det;
    det.deterministic = true;
    RankResult a = rank_exact(g, par);
    RankResult b = rank_exact(g, det);
    RankResult c = rank_exact(g, det);
    CHECK(a.value() == b.value());
    check_certificate(g, a);
    CHECK(b.certificate->labels() == c.certificate->labels());
    CHECK(b.memo_entries == c.memo_entries);
  }
}

TEST_CASE("heuristic and path bound bracket the exact value") {
  for (const Graph& g : testing::corpus(40, 2, 12, 5)) {
    const int value = rank_exact(g).value();
    Ranking h = heuristic_ranking(g);
    CHECK(is_valid(h));
    CHECK(h.label_count() >= value);
    CHECK(path_lower_bound(g) <= value);
  }
  CHECK(path_lower_bound(build(GraphShape::path(16))) == 5);
}

TEST_CASE("vertex deletion changes the rank by at most one") {
  for (const Graph& g : testing::corpus(25, 3, 10, 17)) {
    const int value = rank_exact(g).value();
    for (int v = 0; v < g.vertex_count(); ++v) {
      const int without = rank_exact(g.without_vertex(v)).value();
      CHECK(without <= value);
      CHECK(without >= value - 1);
    }
  }
}

TEST_CASE("induced subgraphs never need more labels") {
  std::mt19937_64 rng(23);
  for (const Graph& g : testing::corpus(25, 4, 12, 31)) {
    const int value = rank_exact(g).value();
    std::vector<int> keep;
    std::bernoulli_distribution take(0.6);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (take(rng)) keep.push_back(v);
    }
    if (keep.empty()) continue;
    CHECK(rank_exact(g.induced(keep)).value() <= value);
  }
}

TEST_CASE("method names round trip") {
  for (Method m : {Method::exact, Method::brute_force, Method::formula, Method::bound, Method::construction}) {
    CHECK(method_from_string(to_string(m)) == m);
  }
  CHECK_FALSE(method_from_string("guess").has_value());
}
