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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "rankgrid/io.hpp"

using namespace rankgrid;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("rankgrid-cli-test-" + std::to_string(rd()));
    fs::create_directories(path);
    ::setenv("RANKGRID_CACHE", (path / "cache.jsonl").c_str(), 1);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
    ::unsetenv("RANKGRID_CACHE");
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("exact examples") {
  TempDir tmp;
  for (auto [flag, shape, value] : std::vector<std::tuple<std::string, std::string, int>>{
           {"--grid", "4x5", 8}, {"--grid", "2x2", 3}, {"--path", "8", 4}}) {
    Outcome o = run({"exact", flag, shape});
    CHECK(o.code == cli::kOk);
    json j = json::parse(o.out);
    CHECK(j.at("value") == value);
    CHECK(j.at("exact") == true);
  }
}

TEST_CASE("exact handles decorations, triangles and graph files") {
  TempDir tmp;
  Outcome o = run({"exact", "--grid", "4x2", "--sticky", "both", "--no-cache"});
  CHECK(o.code == cli::kOk);
  CHECK(json::parse(o.out).at("value") == 6);
  o = run({"exact", "--grid", "4x3", "--remove-corner", "NW", "--remove-corner", "NE", "--no-cache"});
  CHECK(o.code == cli::kOk);
  CHECK(json::parse(o.out).at("value") <= 5);
  o = run({"exact", "--triangle", "4", "--no-cache"});
  CHECK(o.code == cli::kOk);
  CHECK(json::parse(o.out).at("value") == 6);
  const std::string file = tmp.file("graph.json");
  std::ofstream(file) << to_json(build(GraphShape::grid(3, 3)));
  o = run({"exact", "--graph", file, "--no-cache"});
  CHECK(o.code == cli::kOk);
  CHECK(json::parse(o.out).at("value") == 5);
}

TEST_CASE("exit codes") {
  TempDir tmp;
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"exact"}).code == cli::kUsage);
  CHECK(run({"exact", "--grid", "4x"}).code == cli::kUsage);
  CHECK(run({"exact", "--grid", "0x3"}).code == cli::kUsage);
  CHECK(run({"exact", "--grid", "2x2", "--path", "3"}).code == cli::kUsage);
  CHECK(run({"exact", "--graph", tmp.file("missing.json")}).code == cli::kUsage);
  CHECK(run({"formula", "--m", "5", "--n", "5"}).code == cli::kUsage);
  Outcome budget = run({"exact", "--grid", "6x6", "--budget", "0.05", "--no-cache"});
  CHECK(budget.code == cli::kBudget);
  json j = json::parse(budget.out);
  CHECK(j.at("exact") == false);
  CHECK(j.at("lower") <= 11);
  CHECK(j.at("upper") >= 11);
  CHECK(j.at("certificate").is_object());
}

TEST_CASE("decide") {
  TempDir tmp;
  Outcome o = run({"decide", "--path", "4", "-k", "2"});
  CHECK(o.code == cli::kOk);
  CHECK(json::parse(o.out).at("outcome") == "infeasible");
  o = run({"decide", "--grid", "4x2", "--sticky", "both", "-k", "6"});
  CHECK(o.code == cli::kOk);
  json j = json::parse(o.out);
  CHECK(j.at("outcome") == "found");
  CHECK(j.at("ranking").at("labels").size() == 20);
  CHECK(run({"decide", "--path", "4", "-k", "0"}).code == cli::kUsage);
}

TEST_CASE("deterministic runs are byte identical") {
  TempDir tmp;
  for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {"exact", "--grid", "4x5", "--deterministic"},
           {"exact", "--triangle", "5", "--deterministic", "--jobs", "2"},
           {"decide", "--grid", "3x4", "-k", "6", "--deterministic"},
           {"construct", "grid4", "--n", "30"},
           {"sweep", "--m", "4", "--n-range", "3..12", "--methods", "formula,bucket,bounds,construct"},
           {"bounds", "--m", "7", "--n", "40"}}) {
    Outcome a = run(args);
    Outcome b = run(args);
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("emitted JSON re-serializes identically") {
  TempDir tmp;
  Graph g = build(GraphShape::grid(4, 4));
  Outcome o = run({"exact", "--grid", "4x4", "--deterministic"});
  std::string text = o.out.substr(0, o.out.find_last_not_of('\n') + 1);
  CHECK(to_json(result_from_json(text, g), g, false) == text);
  o = run({"exact", "--grid", "4x4"});
  text = o.out.substr(0, o.out.find_last_not_of('\n') + 1);
  CHECK(to_json(result_from_json(text, g), g, true) == text);

  o = run({"construct", "merging-lemma", "--n", "4"});
  REQUIRE(o.code == cli::kOk);
  text = o.out.substr(0, o.out.find_last_not_of('\n') + 1);
  CHECK(to_json(certificate_from_json(text)) == text);

  o = run({"sweep", "--m", "4", "--n-range", "9..12", "--out", "json"});
  REQUIRE(o.code == cli::kOk);
  for (const json& row : json::parse(o.out)) {
    CHECK(cli::to_json(cli::sweep_row_from_json(row.dump())) == row.dump());
  }
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"formula", "--m", "4", "--n", "22"}, {"bounds", "--m", "10"}, {"cache-inspect"}}) {
    o = run(args);
    CHECK(o.code == cli::kOk);
    text = o.out.substr(0, o.out.find_last_not_of('\n') + 1);
    CHECK(json::parse(text).dump() == text);
  }
}

TEST_CASE("formula and bounds output") {
  json f = json::parse(run({"formula", "--m", "4", "--n", "18"}).out);
  CHECK(f.at("value") == 14);
  CHECK(f.at("bucket") == json::array({13, 14}));
  json r = json::parse(run({"formula", "--m", "4", "--n", "22", "--form", "recursive"}).out);
  CHECK(r.at("value") == 15);
  CHECK(json::parse(run({"formula", "--m", "1", "--n", "9"}).out).at("value") == 4);
  json d = json::parse(run({"formula", "--discrepancies", "9..30"}).out);
  CHECK(d.at("discrepancies").size() == 3);
  json b = json::parse(run({"bounds", "--m", "4", "--n", "20"}).out);
  CHECK(b.at("upper").at("alpert") == 14);
  CHECK(b.at("upper").at("diagonal") == 18);
  CHECK(b.at("comparator").at("tighter") == "alpert");
  json sq = json::parse(run({"bounds", "--m", "10"}).out);
  CHECK(sq.at("lower").at("cor1").at("exact") == "125/9");
  json tri = json::parse(run({"bounds", "--triangle", "11"}).out);
  CHECK(tri.at("lower").at("cor2").at("exact") == "41/9");
}

TEST_CASE("sweep tables") {
  TempDir tmp;
  Outcome o = run({"sweep", "--m", "4", "--n-range", "9..16", "--methods", "formula,bucket"});
  REQUIRE(o.code == cli::kOk);
  std::istringstream lines(o.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == cli::kSweepCsvHeader);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.find("bucket_brackets_formula=1") != std::string::npos);
  }
  CHECK(rows == 8);
  o = run({"sweep", "--m", "4", "--n-range", "3..6", "--methods", "formula,exact"});
  CHECK(o.out.find("=0") == std::string::npos);
  o = run({"sweep", "--m", "1", "--n-range", "1..20", "--methods", "formula,exact", "--out", "json"});
  json rows_json = json::parse(o.out);
  CHECK(rows_json.size() == 20);
  for (const json& row : rows_json) CHECK(row.at("flags").at("formula_matches_exact") == true);
  const std::string csv = tmp.file("sweep.csv");
  CHECK(run({"sweep", "--m", "2", "--n-range", "1..5", "-o", csv}).code == cli::kOk);
  CHECK(slurp(csv).rfind(cli::kSweepCsvHeader, 0) == 0);
  CHECK(run({"sweep", "--m", "4", "--n-range", "9..3"}).code == cli::kUsage);
  CHECK(run({"sweep", "--m", "4", "--n-range", "3..9", "--methods", "guess"}).code == cli::kUsage);
}

TEST_CASE("sweep flags follow the numbers") {
  cli::SweepRow row;
  row.m = 4;
  row.n = 9;
  row.formula = 10;
  row.exact_lo = row.exact_hi = 10;
  row.bucket_lo = 10;
  row.bucket_hi = 11;
  row.alpert = 11;
  row.cert_labels = 11;
  cli::refresh_flags(row);
  CHECK(row.flags.at("formula_matches_exact"));
  CHECK(row.flags.at("bucket_brackets_formula"));
  CHECK(row.flags.at("upper_bounds_hold"));
  CHECK_FALSE(row.flags.at("certificate_within_formula"));
  row.exact_lo = row.exact_hi = 9;
  cli::refresh_flags(row);
  CHECK_FALSE(row.flags.at("formula_matches_exact"));
}

TEST_CASE("render") {
  TempDir tmp;
  const std::string p3 = tmp.file("p3.json");
  std::ofstream(p3) << to_json(Ranking(build(GraphShape::path(3)), {1, 2, 1}));
  Outcome o = run({"render", p3});
  CHECK(o.code == cli::kOk);
  CHECK(o.out == "1-2-1\n");
  const std::string bad = tmp.file("bad.json");
  std::ofstream(bad) << to_json(Ranking(build(GraphShape::path(3)), {1, 1, 2}));
  o = run({"render", bad});
  CHECK(o.code == cli::kUsage);
  const auto brace = o.err.find('{');
  REQUIRE(brace != std::string::npos);
  CHECK(json::parse(o.err.substr(brace)).at("level") == 1);
  const std::string cert = tmp.file("cert.json");
  CHECK(run({"construct", "grid4", "--n", "30", "-o", cert}).code == cli::kOk);
  o = run({"render", cert, "--format", "svg"});
  CHECK(o.code == cli::kOk);
  int entries = 0;
  for (auto pos = o.out.find("legend-entry"); pos != std::string::npos; pos = o.out.find("legend-entry", pos + 1)) {
    ++entries;
  }
  CHECK(entries == 16);
  CHECK(run({"render", tmp.file("missing.json")}).code == cli::kUsage);
}

TEST_CASE("construct kinds") {
  TempDir tmp;
  auto labels = [](const Outcome& o) {
    json j = json::parse(o.out);
    int top = 0;
    for (int l : j.at("ranking").at("labels")) top = std::max(top, l);
    return top;
  };
  CHECK(labels(run({"construct", "vertical-cut", "--m", "4", "--n", "61"})) == 20);
  CHECK(labels(run({"construct", "diagonal-cut", "--m", "4", "--n", "14"})) == 16);
  CHECK(labels(run({"construct", "segmented", "--k", "4"})) == 13);
  CHECK(labels(run({"construct", "sticky-base", "--n", "2", "--ends", "2"})) == 6);
  CHECK(labels(run({"construct", "sticky-base", "--n", "5", "--ends", "1"})) == 8);
  CHECK(labels(run({"construct", "merging-lemma", "--n", "3"})) == 14);
  CHECK(labels(run({"construct", "grid", "--m", "6", "--n", "12"})) > 0);
  Outcome ends = run({"construct", "endpoints", "--k-max", "4"});
  CHECK(ends.code == cli::kOk);
  Outcome report = run({"construct", "triangle-report", "--s-max", "10"});
  CHECK(report.code == cli::kOk);
  CHECK(json::parse(report.out).size() == 10);
  CHECK(run({"construct", "nonsense"}).code == cli::kUsage);
  CHECK(run({"construct", "diagonal-cut", "--m", "1", "--n", "5"}).code == cli::kUsage);
}

TEST_CASE("cache is consulted and inspectable") {
  TempDir tmp;
  CHECK(run({"exact", "--grid", "3x4"}).code == cli::kOk);
  json info = json::parse(run({"cache-inspect"}).out);
  CHECK(info.at("records") == 1);
  Outcome again = run({"exact", "--grid", "3x4"});
  CHECK(json::parse(again.out).at("value") == 6);
  std::ofstream(tmp.file("cache.jsonl"), std::ios::app) << "garbage\n";
  info = json::parse(run({"cache-inspect"}).out);
  CHECK(info.at("warnings").size() == 1);
  Outcome bypass = run({"exact", "--grid", "3x4", "--no-cache"});
  CHECK(bypass.code == cli::kOk);
}
