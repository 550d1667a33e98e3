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

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <new>
#include <sstream>

#include "rankgrid/bounds.hpp"
#include "rankgrid/cache.hpp"
#include "rankgrid/construct.hpp"
#include "rankgrid/formulas.hpp"
#include "rankgrid/io.hpp"
#include "rankgrid/render.hpp"
#include "rankgrid/solve.hpp"
#include "rankgrid/verify.hpp"

namespace rankgrid::cli {

using nlohmann::json;

std::atomic<bool>& interrupt_flag() {
  static std::atomic<bool> flag{false};
  return flag;
}

namespace {

// ---------------------------------------------------------------- helpers

struct ShapeArgs {
  std::optional<int> path;
  std::string grid;
  std::optional<int> triangle;
  std::string graph_file;
  std::vector<std::string> sticky;
  std::vector<std::string> corners;
};

void add_shape_options(CLI::App* app, ShapeArgs& a) {
  app->add_option("--path", a.path, "Path with N vertices")->check(CLI::PositiveNumber);
  app->add_option("--grid", a.grid, "Grid MxN (M rows, N columns)");
  app->add_option("--triangle", a.triangle, "Triangle of side S")->check(CLI::PositiveNumber);
  app->add_option("--graph", a.graph_file, "Graph JSON file");
  app->add_option("--sticky", a.sticky, "Sticky end: left, right, both, left-flipped, right-flipped");
  app->add_option("--remove-corner", a.corners, "Remove a corner: NW, NE, SW, SE");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<int, int> parse_dims(const std::string& text) {
  const auto x = text.find_first_of("xX");
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const int m = std::stoi(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    const std::string rest = text.substr(x + 1);
    const int n = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {m, n};
  } catch (const std::logic_error&) {
    throw UsageError("grid dimensions must look like MxN, got '" + text + "'");
  }
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::int64_t v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw UsageError("range must look like A..B, got '" + text + "'");
  }
}

Graph resolve_graph(const ShapeArgs& a) {
  const int chosen = (a.path ? 1 : 0) + (a.grid.empty() ? 0 : 1) + (a.triangle ? 1 : 0) +
                     (a.graph_file.empty() ? 0 : 1);
  if (chosen != 1) throw UsageError("give exactly one of --path, --grid, --triangle, --graph");
  if (!a.graph_file.empty()) {
    if (!a.sticky.empty() || !a.corners.empty()) {
      throw UsageError("decorations apply to --path/--grid/--triangle shapes only");
    }
    return graph_from_json(read_file(a.graph_file));
  }
  GraphShape s;
  if (a.path) {
    s = GraphShape::path(*a.path);
  } else if (a.triangle) {
    s = GraphShape::triangle(*a.triangle);
  } else {
    auto [m, n] = parse_dims(a.grid);
    s = GraphShape::grid(m, n);
  }
  for (const std::string& spec : a.sticky) {
    if (spec == "both") {
      s.with(StickyEnd{Side::left}).with(StickyEnd{Side::right});
    } else if (spec == "left" || spec == "left-flipped") {
      s.with(StickyEnd{Side::left, spec == "left-flipped"});
    } else if (spec == "right" || spec == "right-flipped") {
      s.with(StickyEnd{Side::right, spec == "right-flipped"});
    } else {
      throw UsageError("unknown sticky end '" + spec + "'");
    }
  }
  for (const std::string& c : a.corners) {
    bool ok = false;
    for (Corner corner : {Corner::NW, Corner::NE, Corner::SW, Corner::SE}) {
      if (to_string(corner) == c) {
        s.with(RemoveCorner{corner});
        ok = true;
      }
    }
    if (!ok) throw UsageError("unknown corner '" + c + "'");
  }
  try {
    return build(s);
  } catch (const ShapeError& e) {
    throw UsageError(e.what());
  }
}

struct SolveArgs {
  double budget = 0;
  std::size_t max_memo = 0;
  int jobs = 1;
  bool deterministic = false;
};

void add_solve_options(CLI::App* app, SolveArgs& a) {
  app->add_option("--budget", a.budget, "Time budget in seconds (0 = unlimited)")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--max-memo", a.max_memo, "Memo entry limit (0 = unlimited)");
  app->add_option("--jobs", a.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app->add_flag("--deterministic", a.deterministic,
                "Single-threaded search, no cache reads, no timings in the output");
}

SolveOptions solve_options(const SolveArgs& a) {
  SolveOptions o;
  o.budget.time = std::chrono::milliseconds(static_cast<long long>(a.budget * 1000));
  o.budget.max_memo_entries = a.max_memo;
  o.jobs = a.deterministic ? 1 : a.jobs;
  o.deterministic = a.deterministic;
  return o;
}

struct CacheArgs {
  std::string path;
  bool disabled = false;
};

std::optional<ResultCache> open_cache(const CacheArgs& a) {
  if (a.disabled) return std::nullopt;
  return ResultCache(ResultCache::resolve(a.path.empty() ? std::nullopt : std::optional(a.path)));
}

void report_warnings(const std::optional<ResultCache>& cache, std::ostream& err) {
  if (!cache) return;
  for (const auto& w : cache->warnings()) err << "warning: " << w << "\n";
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

json rational_json(const Rational& r) {
  return {{"exact", r.to_string()}, {"bound", to_rank_bound(r)}};
}

// ---------------------------------------------------------------- commands

int cmd_exact(const ShapeArgs& sa, const SolveArgs& so, const CacheArgs& ca, std::ostream& out,
              std::ostream& err) {
  const Graph g = resolve_graph(sa);
  SolveOptions options = solve_options(so);
  auto cache = open_cache(ca);
  if (cache && !so.deterministic) {
    if (auto hit = cache->lookup(g)) {
      if (hit->is_exact() && hit->certificate) {
        err << "cache hit: " << cache->path().string() << "\n";
        report_warnings(cache, err);
        out << to_json(*hit, g, true) << "\n";
        return kOk;
      }
      if (hit->certificate) options.seed = hit->certificate;
    }
  }
  if (!options.seed && g.vertex_count() > 30) options.seed = constructive_seed(g);
  const RankResult r = rank_exact(g, options);
  if (cache && !cache->store(g, r)) err << "warning: result not cached\n";
  report_warnings(cache, err);
  out << to_json(r, g, !so.deterministic) << "\n";
  if (r.budget_exhausted) {
    err << "budget exhausted: rank is in [" << r.lower << ", " << r.upper << "]\n";
    return kBudget;
  }
  return kOk;
}

int cmd_decide(const ShapeArgs& sa, const SolveArgs& so, int k, std::ostream& out,
               std::ostream& err) {
  const Graph g = resolve_graph(sa);
  const DecisionResult d = rank_decision(g, k, solve_options(so));
  out << to_json(d, g, k, !so.deterministic) << "\n";
  if (d.outcome == DecisionOutcome::unknown) {
    err << "budget exhausted before deciding k=" << k << "\n";
    return kBudget;
  }
  return kOk;
}

struct FormulaArgs {
  int m = 4;
  std::int64_t n = 0;
  std::string form = "closed";
  std::string discrepancies;
};

int cmd_formula(const FormulaArgs& a, std::ostream& out) {
  if (!a.discrepancies.empty()) {
    auto [from, to] = parse_range(a.discrepancies);
    if (from < 1 || from > to) throw UsageError("discrepancy range must satisfy 1 <= A <= B");
    json list = json::array();
    for (const Discrepancy& d : discrepancy_report(from, to)) {
      list.push_back({{"n", d.n}, {"closed", d.closed}, {"recursive", d.recursive}});
    }
    out << json{{"from", from}, {"to", to}, {"discrepancies", list}}.dump() << "\n";
    return kOk;
  }
  if (a.n < 1) throw UsageError("--n must be positive");
  int value = 0;
  if (a.form == "recursive") {
    if (a.m != 4) throw UsageError("the recursive form exists for 4 rows only");
    value = rank_4xn_recursive(a.n);
  } else if (a.form == "closed") {
    switch (a.m) {
      case 1: value = rank_path(a.n); break;
      case 2: value = rank_2xn(a.n); break;
      case 3: value = rank_3xn(a.n); break;
      case 4: value = rank_4xn(a.n); break;
      default: throw UsageError("closed forms exist for 1 to 4 rows");
    }
  } else {
    throw UsageError("--form must be closed or recursive");
  }
  json j = {{"m", a.m}, {"n", a.n}, {"value", value}, {"form", a.form}, {"bucket", nullptr}};
  if (a.m == 4 && a.n > 8) {
    const BoundBucket b = bucket_4xn(a.n);
    j["bucket"] = json::array({b.lower, b.upper});
  }
  out << j.dump() << "\n";
  return kOk;
}

struct BoundsArgs {
  std::optional<int> m;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> triangle;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  if (a.triangle) {
    if (a.m || a.n) throw UsageError("--triangle excludes --m and --n");
    if (*a.triangle < 1 || *a.triangle > 1'000'000) throw UsageError("--triangle must be in 1..1000000");
    const int s = static_cast<int>(*a.triangle);
    out << json{{"triangle", s},
                {"lower", {{"cor2", rational_json(corollary_lower_tri(s))}}},
                {"upper", {{"tri_bound", tri_bound(s)}}}}
               .dump()
        << "\n";
    return kOk;
  }
  if (!a.m || *a.m < 1) throw UsageError("--m is required and must be positive");
  const int m = *a.m;
  const std::int64_t n = a.n.value_or(m);
  if (n < 1) throw UsageError("--n must be positive");
  const int side = static_cast<int>(std::min<std::int64_t>(m, n));
  const ComparatorReport c = compare_upper(m, n);
  json j = {{"m", m},
            {"lower", {{"thm2", square_lower(side)}, {"cor1", rational_json(corollary_lower_square(side))}}},
            {"upper", {{"alpert", c.alpert}, {"diagonal", c.diagonal ? json(*c.diagonal) : json(nullptr)}}},
            {"comparator", {{"tighter", to_string(c.tighter)}, {"threshold", c.threshold}}}};
  if (a.n) j["n"] = n;
  if (m >= 5 && n == m) {
    const SquareContainment h = check_square_containment(m);
    j["containment"] = {{"holds", h.holds},
                        {"k", h.k},
                        {"dims", json::array({h.dims.first, h.dims.second})},
                        {"target_side", h.target_side}};
  }
  out << j.dump() << "\n";
  return kOk;
}

int cmd_compare(int m, const std::string& range, std::ostream& out) {
  auto [from, to] = parse_range(range);
  if (m < 1 || from < 1 || from > to) throw UsageError("need m >= 1 and a range 1 <= A <= B");
  json list = json::array();
  for (std::int64_t n = from; n <= to; ++n) {
    const ComparatorReport c = compare_upper(m, n);
    list.push_back({{"m", c.m},
                    {"n", c.n},
                    {"alpert", c.alpert},
                    {"diagonal", c.diagonal ? json(*c.diagonal) : json(nullptr)},
                    {"tighter", to_string(c.tighter)},
                    {"threshold", c.threshold}});
  }
  out << list.dump() << "\n";
  return kOk;
}

struct SweepArgs {
  int m = 4;
  std::string range;
  std::vector<std::string> methods{"formula", "bucket", "bounds"};
  std::string format = "csv";
  std::string output;
  double budget = 0;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  auto [from, to] = parse_range(a.range);
  if (a.m < 1 || from < 1 || from > to) throw UsageError("need --m >= 1 and --n-range A..B with 1 <= A <= B");
  for (const auto& method : a.methods) {
    static const std::vector<std::string> known{"formula", "exact", "bucket", "bounds", "construct"};
    if (std::find(known.begin(), known.end(), method) == known.end()) {
      throw UsageError("unknown method '" + method + "'");
    }
  }
  if (a.format != "csv" && a.format != "json") throw UsageError("--out must be csv or json");
  SweepOptions o{a.m, from, to, a.methods, a.budget};

  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output);
    if (!file) throw UsageError("cannot write '" + a.output + "'");
  }
  std::ostream& sink = a.output.empty() ? out : file;
  const bool csv = a.format == "csv";
  sink << (csv ? std::string(kSweepCsvHeader) + "\n" : "[");
  bool first = true, interrupted = false;
  for (std::int64_t n = from; n <= to; ++n) {
    SweepRow row = sweep_row(o, n);
    if (interrupt_flag().load()) {
      interrupted = true;
      break;
    }
    if (csv) {
      sink << to_csv(row) << "\n";
    } else {
      sink << (first ? "\n" : ",\n") << to_json(row);
    }
    first = false;
    sink.flush();
  }
  if (!csv) sink << "\n]\n";
  sink.flush();
  if (interrupted) {
    err << "interrupted: partial results written\n";
    return kBudget;
  }
  return kOk;
}

// Ranking or certificate JSON, both with an embedded graph.
Ranking load_ranking(const std::string& path) {
  const std::string text = read_file(path);
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw UsageError("'" + path + "' is not JSON");
  if (j.contains("ranking")) return certificate_from_json(text).ranking;
  return ranking_from_json(text);
}

int cmd_render(const std::string& file, const std::string& format, const std::string& output,
               std::ostream& out, std::ostream& err) {
  const Ranking r = load_ranking(file);
  const auto verdict = validate(r);
  if (const auto* bad = std::get_if<Violation>(&verdict)) {
    err << "invalid ranking: " << to_json(*bad, r.graph()) << "\n";
    return kUsage;
  }
  if (format == "ascii") {
    emit(render_ascii(r), output, out);
  } else if (format == "svg") {
    emit(render_svg(r), output, out);
  } else {
    throw UsageError("--format must be ascii or svg");
  }
  return kOk;
}

int cmd_cache_inspect(const CacheArgs& a, std::ostream& out, std::ostream& err) {
  ResultCache cache(ResultCache::resolve(a.path.empty() ? std::nullopt : std::optional(a.path)));
  json entries = json::array();
  for (const CacheRecord& r : cache.records()) {
    entries.push_back({{"graph_hash", r.graph_hash},
                       {"shape", r.shape},
                       {"lower", r.lower},
                       {"upper", r.upper},
                       {"certificate", r.labels.has_value()},
                       {"solver_version", r.solver_version}});
  }
  for (const auto& w : cache.warnings()) err << "warning: " << w << "\n";
  out << json{{"path", cache.path().string()},
              {"format_version", kCacheFormatVersion},
              {"records", cache.records().size()},
              {"warnings", cache.warnings()},
              {"entries", entries}}
             .dump()
      << "\n";
  return kOk;
}

// ---------------------------------------------------------------- construct

Certificate with_step(Certificate c, const std::string& name, std::vector<std::string> inputs) {
  c.steps.push_back({name, std::move(inputs), c.ranking.graph().shape()->name(), c.labels()});
  return c;
}

std::string shape_name(const Ranking& r) {
  return r.graph().shape() ? r.graph().shape()->name() : "graph:" + r.graph().hash();
}

struct ConstructArgs {
  std::int64_t n = 0;
  int m = 0;
  int s = 0;
  int k = 0;
  int ends = 2;
  std::string input, second, output;
};

Certificate diagonal_certificate(int m, int n) {
  if (n < m + 2) throw UsageError("diagonal cut needs n >= m + 2");
  const int inner_width = (n - m + 1) / 2 - 1;
  std::optional<Certificate> inner;
  if (inner_width > 0) inner = grid_certificate(m, inner_width);
  const Ranking tri = cut_triangle_ranking(m);
  Certificate c;
  c.ranking = diagonal_cut(m, n, inner ? std::optional(inner->ranking) : std::nullopt, tri);
  if (inner) c.steps = inner->steps;
  std::vector<std::string> inputs{shape_name(tri) + " (" + std::to_string(tri.label_count()) + " labels)"};
  if (inner) inputs.insert(inputs.begin(), shape_name(inner->ranking));
  return with_step(std::move(c), "diagonal_cut", inputs);
}

int cmd_construct(const std::string& kind, const ConstructArgs& a, std::ostream& out) {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw UsageError(what);
  };
  Certificate c;
  if (kind == "grid4") {
    need(a.n >= 1, "--n must be positive");
    c = grid4_certificate(a.n);
  } else if (kind == "grid") {
    need(a.m >= 1 && a.n >= 1 && a.n <= 100000, "--m and --n must be positive");
    c = grid_certificate(a.m, static_cast<int>(a.n));
  } else if (kind == "endpoints") {
    need(a.k >= 3, "--k-max must be at least 3");
    json list = json::array();
    for (const auto& e : run_endpoint_certificates(a.k)) {
      json chain = json::parse(to_json(e.certificate)).at("chain");
      list.push_back({{"n", e.n}, {"expected", e.expected}, {"labels", e.certificate.labels()}, {"chain", chain}});
    }
    emit(list.dump(), a.output, out);
    return kOk;
  } else if (kind == "vertical-cut") {
    need(a.m >= 1 && a.n >= 2, "--m >= 1 and --n >= 2 required");
    Certificate sub = grid_certificate(a.m, static_cast<int>(a.n / 2));
    c.ranking = vertical_cut(a.m, static_cast<int>(a.n), sub.ranking);
    c.steps = sub.steps;
    c = with_step(std::move(c), "vertical_cut", {shape_name(sub.ranking)});
  } else if (kind == "diagonal-cut") {
    need(a.m >= 2 && a.n >= 1, "--m >= 2 and --n required");
    c = diagonal_certificate(a.m, static_cast<int>(a.n));
  } else if (kind == "triangle") {
    need(a.s >= 1, "--s must be positive");
    TriangleRanking t = triangle_ranking(a.s);
    c.ranking = t.ranking;
    c = with_step(std::move(c), t.exact ? "triangle_exact" : "triangle_dissection",
                  {"claimed=" + std::to_string(t.claimed)});
  } else if (kind == "triangle-report") {
    need(a.s >= 1 && a.s <= 64, "--s-max must be in 1..64");
    json list = json::array();
    for (int s = 1; s <= a.s; ++s) {
      TriangleRanking t = triangle_ranking(s);
      list.push_back({{"s", s}, {"claimed", t.claimed}, {"achieved", t.achieved}, {"exact", t.exact}});
    }
    emit(list.dump(), a.output, out);
    return kOk;
  } else if (kind == "segmented") {
    need(a.k >= 3, "--k must be at least 3");
    c = segmented_certificate(a.k);
  } else if (kind == "sticky-base") {
    need(a.n >= 1 && a.n <= 8, "--n must be in 1..8");
    need(a.ends == 1 || a.ends == 2, "--ends must be 1 or 2");
    c = a.ends == 2 ? two_sticky_base(static_cast<int>(a.n)) : one_sticky_base(static_cast<int>(a.n));
  } else if (kind == "merge-two-sticky") {
    const Ranking in = load_ranking(a.input);
    c.ranking = merge_two_sticky(in);
    c = with_step(std::move(c), "merge_two_sticky", {shape_name(in)});
  } else if (kind == "join-one-sticky") {
    const Ranking in = load_ranking(a.input);
    c.ranking = join_one_sticky(in);
    c = with_step(std::move(c), "join_one_sticky", {shape_name(in)});
  } else if (kind == "merging-lemma") {
    // Without input files, --n picks the exact bases of widths n and n-1.
    const bool from_files = !a.input.empty() || !a.second.empty();
    need(from_files || (a.n >= 2 && a.n <= 6), "--input and --second, or --n in 2..6, required");
    const Ranking one = from_files ? load_ranking(a.input) : one_sticky_base(static_cast<int>(a.n)).ranking;
    const Ranking two =
        from_files ? load_ranking(a.second) : two_sticky_base(static_cast<int>(a.n) - 1).ranking;
    MergeOutput mo = merging_lemma(one, two);
    c.ranking = mo.full;
    c = with_step(std::move(c), "merging_lemma", {shape_name(one), shape_name(two)});
  } else {
    throw UsageError("unknown construction '" + kind + "'");
  }
  if (!is_valid(c.ranking)) throw InvariantViolation(kind + ": verifier rejected the certificate");
  emit(to_json(c), a.output, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex rankings of grid graphs: exact solver, closed forms, bounds and certificates",
               "rankgrid"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kSolverVersion));

  std::function<int()> action;
  CacheArgs cache;

  ShapeArgs exact_shape;
  SolveArgs exact_solve;
  auto* exact = app.add_subcommand("exact", "Exact rank number with a certificate (JSON)");
  add_shape_options(exact, exact_shape);
  add_solve_options(exact, exact_solve);
  exact->add_option("--cache", cache.path, "Cache file (default: $RANKGRID_CACHE or user data dir)");
  exact->add_flag("--no-cache", cache.disabled, "Neither read nor write the cache");
  exact->callback([&] { action = [&] { return cmd_exact(exact_shape, exact_solve, cache, out, err); }; });

  ShapeArgs decide_shape;
  SolveArgs decide_solve;
  int k = 0;
  auto* decide = app.add_subcommand("decide", "Search for a ranking with at most k labels (JSON)");
  add_shape_options(decide, decide_shape);
  add_solve_options(decide, decide_solve);
  decide->add_option("-k,--k", k, "Label budget")->required()->check(CLI::PositiveNumber);
  decide->callback([&] { action = [&] { return cmd_decide(decide_shape, decide_solve, k, out, err); }; });

  FormulaArgs fa;
  auto* formula = app.add_subcommand("formula", "Closed-form rank numbers for 1 to 4 rows (JSON)");
  formula->add_option("--m", fa.m, "Rows (1..4)");
  formula->add_option("--n", fa.n, "Columns");
  formula->add_option("--form", fa.form, "closed or recursive (4 rows)");
  formula->add_option("--discrepancies", fa.discrepancies,
                      "List widths A..B where the two 4-row forms differ");
  formula->callback([&] { action = [&] { return cmd_formula(fa, out); }; });

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds for G(m,n) or a triangle (JSON)");
  bounds->add_option("--m", ba.m, "Rows");
  bounds->add_option("--n", ba.n, "Columns (default: square)");
  bounds->add_option("--triangle", ba.triangle, "Triangle side instead of a grid");
  bounds->callback([&] { action = [&] { return cmd_bounds(ba, out); }; });

  int cmp_m = 0;
  std::string cmp_range;
  auto* compare = app.add_subcommand("compare", "Compare the vertical-cut and diagonal-cut upper bounds");
  compare->add_option("--m", cmp_m, "Rows")->required();
  compare->add_option("--n-range", cmp_range, "Columns A..B")->required();
  compare->callback([&] { action = [&] { return cmd_compare(cmp_m, cmp_range, out); }; });

  std::string construct_kind;
  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a verified certificate (JSON)");
  construct
      ->add_option("kind", construct_kind,
                   "grid4, grid, endpoints, vertical-cut, diagonal-cut, triangle, triangle-report, "
                   "segmented, sticky-base, merge-two-sticky, join-one-sticky, merging-lemma")
      ->required();
  construct->add_option("--n", ca.n, "Columns");
  construct->add_option("--m", ca.m, "Rows");
  construct->add_option("--s,--s-max", ca.s, "Triangle side");
  construct->add_option("--k,--k-max", ca.k, "Level parameter");
  construct->add_option("--ends", ca.ends, "Sticky ends for sticky-base (1 or 2)");
  construct->add_option("--input", ca.input, "Input ranking or certificate JSON");
  construct->add_option("--second", ca.second, "Second input (merging-lemma: two sticky ends)");
  construct->add_option("-o,--output", ca.output, "Write to a file instead of stdout");
  construct->callback([&] { action = [&] { return cmd_construct(construct_kind, ca, out); }; });

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Tabulate methods over a range of widths (CSV or JSON)");
  sweep->add_option("--m", sw.m, "Rows")->required();
  sweep->add_option("--n-range", sw.range, "Columns A..B")->required();
  sweep->add_option("--methods", sw.methods, "formula, exact, bucket, bounds, construct")->delimiter(',');
  sweep->add_option("--out", sw.format, "csv or json");
  sweep->add_option("-o,--output", sw.output, "Write to a file instead of stdout");
  sweep->add_option("--budget", sw.budget, "Per-instance solver budget in seconds")->check(CLI::NonNegativeNumber);
  sweep->callback([&] { action = [&] { return cmd_sweep(sw, out, err); }; });

  std::string render_file, render_format = "ascii", render_output;
  auto* render = app.add_subcommand("render", "Draw a ranking or certificate as text or SVG");
  render->add_option("file", render_file, "Ranking or certificate JSON")->required();
  render->add_option("--format", render_format, "ascii or svg");
  render->add_option("-o,--output", render_output, "Write to a file instead of stdout");
  render->callback([&] {
    action = [&] { return cmd_render(render_file, render_format, render_output, out, err); };
  });

  CacheArgs inspect_cache;
  auto* inspect = app.add_subcommand("cache-inspect", "Summarize the result cache (JSON)");
  inspect->add_option("--cache", inspect_cache.path, "Cache file");
  inspect->callback([&] { action = [&] { return cmd_cache_inspect(inspect_cache, out, err); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExhaustedError& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const std::bad_alloc&) {
    err << "budget exhausted: out of memory\n";
    return kBudget;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
}

}  // namespace rankgrid::cli
