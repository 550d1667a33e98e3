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

#include "rankgrid/construct.hpp"
#include "rankgrid/formulas.hpp"
#include "rankgrid/render.hpp"

using namespace rankgrid;

namespace {

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("ascii drawings") {
  Graph p3 = build(GraphShape::path(3));
  CHECK(render_ascii(Ranking(p3, {1, 2, 1})) == "1-2-1\n");
  Graph c4 = build(GraphShape::grid(2, 2));
  CHECK(render_ascii(Ranking(c4, {1, 2, 3, 1})) == "1-2\n| |\n3-1\n");
  const std::string tri = render_ascii(Ranking(build(GraphShape::triangle(2)), {1, 2, 3}));
  CHECK(tri.find('\\') != std::string::npos);
  CHECK_THROWS_AS(render_ascii(Ranking(p3, {1, 1, 2})), UsageError);
}

TEST_CASE("svg drawings") {
  Graph p3 = build(GraphShape::path(3));
  const std::string svg = render_svg(Ranking(p3, {1, 2, 1}));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "<circle") >= 3);
  CHECK(count(svg, "class=\"max-label\"") == 1);
  CHECK(count(svg, "class=\"legend-entry\"") == 2);
  CHECK(svg == render_svg(Ranking(p3, {1, 2, 1})));
  CHECK_THROWS_AS(render_svg(Ranking(p3, {2, 2, 1})), UsageError);
}

TEST_CASE("endpoint certificates show one legend entry per label") {
  for (int n : {14, 17, 30}) {
    Certificate c = grid4_certificate(n);
    const std::string svg = render_svg(c.ranking);
    CHECK(count(svg, "class=\"legend-entry\"") == rank_4xn(n));
  }
}
