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

#include "rankgrid/io.hpp"

#include <json.hpp>

#include "io_detail.hpp"

namespace rankgrid {

using nlohmann::json;

namespace detail {

json parse(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(what + ": malformed JSON (" + std::string(e.what()) + ")");
  }
}

namespace {

json coord_json(Coord c) { return json::array({c.row, c.col}); }

Coord coord_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw UsageError("coordinate must be [row, col]");
  return {j.at(0).get<int>(), j.at(1).get<int>()};
}

Family family_from(const std::string& s) {
  for (Family f : {Family::path, Family::grid, Family::triangle}) {
    if (to_string(f) == s) return f;
  }
  throw UsageError("unknown graph family '" + s + "'");
}

Corner corner_from(const std::string& s) {
  for (Corner c : {Corner::NW, Corner::NE, Corner::SW, Corner::SE}) {
    if (to_string(c) == s) return c;
  }
  throw UsageError("unknown corner '" + s + "'");
}

}  // namespace

json shape_json(const GraphShape& s) {
  json decos = json::array();
  for (const auto& d : s.decorations) {
    if (const auto* st = std::get_if<StickyEnd>(&d)) {
      decos.push_back({{"type", "sticky_end"}, {"side", to_string(st->side)}, {"flipped", st->flipped}});
    } else if (const auto* rc = std::get_if<RemoveCorner>(&d)) {
      decos.push_back({{"type", "remove_corner"}, {"corner", to_string(rc->which)}});
    } else {
      const auto& ca = std::get<CustomAttachment>(d);
      json vs = json::array(), es = json::array();
      for (Coord c : ca.vertices) vs.push_back(coord_json(c));
      for (auto [a, b] : ca.edges) es.push_back(json::array({coord_json(a), coord_json(b)}));
      decos.push_back({{"type", "custom"}, {"vertices", vs}, {"edges", es}});
    }
  }
  return {{"family", to_string(s.family)}, {"rows", s.rows}, {"cols", s.cols}, {"decorations", decos}};
}

GraphShape shape_from(const json& j) {
  GraphShape s;
  s.family = family_from(j.at("family").get<std::string>());
  s.rows = j.at("rows").get<int>();
  s.cols = j.at("cols").get<int>();
  for (const json& d : j.value("decorations", json::array())) {
    const std::string type = d.at("type").get<std::string>();
    if (type == "sticky_end") {
      const std::string side = d.at("side").get<std::string>();
      if (side != "left" && side != "right") throw UsageError("unknown side '" + side + "'");
      s.decorations.emplace_back(
          StickyEnd{side == "left" ? Side::left : Side::right, d.value("flipped", false)});
    } else if (type == "remove_corner") {
      s.decorations.emplace_back(RemoveCorner{corner_from(d.at("corner").get<std::string>())});
    } else if (type == "custom") {
      CustomAttachment ca;
      for (const json& v : d.at("vertices")) ca.vertices.push_back(coord_from(v));
      for (const json& e : d.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw UsageError("custom edge must be [[r,c],[r,c]]");
        ca.edges.emplace_back(coord_from(e.at(0)), coord_from(e.at(1)));
      }
      s.decorations.emplace_back(std::move(ca));
    } else {
      throw UsageError("unknown decoration type '" + type + "'");
    }
  }
  return s;
}

json graph_json(const Graph& g) {
  json coords = json::array(), edges = json::array();
  for (Coord c : g.coords()) coords.push_back(coord_json(c));
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  json out = {{"vertex_count", g.vertex_count()}, {"coords", coords}, {"edges", edges}};
  if (g.shape()) out["shape"] = shape_json(*g.shape());
  return out;
}

Graph graph_from(const json& j) {
  const int n = j.at("vertex_count").get<int>();
  std::vector<Coord> coords;
  for (const json& c : j.at("coords")) coords.push_back(coord_from(c));
  std::vector<std::pair<int, int>> edges;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw UsageError("edge must be [u, v]");
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  std::optional<GraphShape> shape;
  if (j.contains("shape")) {
    shape = shape_from(j.at("shape"));
    // A described graph must be exactly what its shape builds.
    Graph built = build(*shape);
    Graph given(n, edges, coords, shape);
    if (!(built == given)) throw UsageError("graph JSON does not match its shape description");
    return built;
  }
  try {
    return Graph(n, std::move(edges), std::move(coords));
  } catch (const ShapeError& e) {
    throw UsageError(std::string("graph JSON: ") + e.what());
  }
}

json ranking_json(const Ranking& r, bool embed_graph) {
  json out = {{"graph_hash", r.graph().hash()}, {"labels", r.labels()}};
  if (embed_graph) out["graph"] = graph_json(r.graph());
  return out;
}

Ranking ranking_from(const json& j, const Graph* graph) {
  std::vector<int> labels = j.at("labels").get<std::vector<int>>();
  const std::string hash = j.at("graph_hash").get<std::string>();
  std::shared_ptr<const Graph> g;
  if (j.contains("graph")) {
    g = std::make_shared<const Graph>(graph_from(j.at("graph")));
  } else if (graph != nullptr) {
    g = std::make_shared<const Graph>(*graph);
  } else {
    throw UsageError("ranking JSON has no embedded graph and none was supplied");
  }
  if (g->hash() != hash) {
    throw UsageError("ranking JSON graph_hash " + hash + " does not match graph " + g->hash());
  }
  return Ranking(g, std::move(labels));
}

json steps_json(const std::vector<ChainStep>& steps) {
  json out = json::array();
  for (const auto& s : steps) {
    out.push_back({{"construction", s.construction},
                   {"inputs", s.inputs},
                   {"output", s.output},
                   {"labels", s.labels}});
  }
  return out;
}

std::vector<ChainStep> steps_from(const json& j) {
  std::vector<ChainStep> out;
  for (const json& s : j) {
    out.push_back({s.at("construction").get<std::string>(),
                   s.at("inputs").get<std::vector<std::string>>(),
                   s.at("output").get<std::string>(), s.at("labels").get<int>()});
  }
  return out;
}

template <typename F>
auto guarded(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw UsageError(what + ": " + e.what());
  }
}

}  // namespace detail

using namespace detail;

std::string to_json(const GraphShape& shape) { return shape_json(shape).dump(); }

GraphShape shape_from_json(const std::string& text) {
  return guarded("shape JSON", [&] { return shape_from(parse(text, "shape JSON")); });
}

std::string to_json(const Graph& g) { return graph_json(g).dump(); }

Graph graph_from_json(const std::string& text) {
  return guarded("graph JSON", [&] { return graph_from(parse(text, "graph JSON")); });
}

std::string to_json(const Ranking& r, bool embed_graph) { return ranking_json(r, embed_graph).dump(); }

Ranking ranking_from_json(const std::string& text, const Graph* graph) {
  return guarded("ranking JSON", [&] { return ranking_from(parse(text, "ranking JSON"), graph); });
}

std::string to_json(const Violation& v, const Graph& g) {
  json path = json::array();
  for (int x : v.path) path.push_back(coord_json(g.coord(x)));
  return json{{"level", v.level},
              {"first", coord_json(g.coord(v.first))},
              {"second", coord_json(g.coord(v.second))},
              {"path", path}}
      .dump();
}

std::string to_json(const RankResult& r, const Graph& g, bool with_elapsed) {
  json out = {{"graph_hash", g.hash()},
              {"lower", r.lower},
              {"upper", r.upper},
              {"exact", r.is_exact()},
              {"method", to_string(r.method)},
              {"budget_exhausted", r.budget_exhausted},
              {"memo_entries", r.memo_entries},
              {"solver_version", kSolverVersion}};
  if (g.shape()) out["shape"] = g.shape()->name();
  if (r.is_exact()) out["value"] = r.lower;
  out["certificate"] = r.certificate ? ranking_json(*r.certificate, false) : json(nullptr);
  if (with_elapsed) out["elapsed_ms"] = r.elapsed.count();
  return out.dump();
}

RankResult result_from_json(const std::string& text, const Graph& g) {
  return guarded("result JSON", [&] {
    const json j = parse(text, "result JSON");
    if (j.at("graph_hash").get<std::string>() != g.hash()) {
      throw UsageError("result JSON belongs to a different graph");
    }
    RankResult r;
    r.lower = j.at("lower").get<int>();
    r.upper = j.at("upper").get<int>();
    auto m = method_from_string(j.at("method").get<std::string>());
    if (!m) throw UsageError("result JSON: unknown method");
    r.method = *m;
    r.budget_exhausted = j.at("budget_exhausted").get<bool>();
    r.memo_entries = j.at("memo_entries").get<std::size_t>();
    if (j.contains("elapsed_ms")) r.elapsed = std::chrono::milliseconds(j.at("elapsed_ms").get<long long>());
    if (!j.at("certificate").is_null()) r.certificate = ranking_from(j.at("certificate"), &g);
    return r;
  });
}

namespace {

const char* outcome_name(DecisionOutcome o) {
  switch (o) {
    case DecisionOutcome::found: return "found";
    case DecisionOutcome::infeasible: return "infeasible";
    case DecisionOutcome::unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace

std::string to_json(const DecisionResult& d, const Graph& g, int k, bool with_elapsed) {
  json out = {{"graph_hash", g.hash()},
              {"k", k},
              {"outcome", outcome_name(d.outcome)},
              {"budget_exhausted", d.budget_exhausted},
              {"ranking", d.ranking ? ranking_json(*d.ranking, false) : json(nullptr)}};
  if (with_elapsed) out["elapsed_ms"] = d.elapsed.count();
  return out.dump();
}

DecisionResult decision_from_json(const std::string& text, const Graph& g) {
  return guarded("decision JSON", [&] {
    const json j = parse(text, "decision JSON");
    if (j.at("graph_hash").get<std::string>() != g.hash()) {
      throw UsageError("decision JSON belongs to a different graph");
    }
    DecisionResult d;
    const std::string outcome = j.at("outcome").get<std::string>();
    bool known = false;
    for (auto o : {DecisionOutcome::found, DecisionOutcome::infeasible, DecisionOutcome::unknown}) {
      if (outcome == outcome_name(o)) {
        d.outcome = o;
        known = true;
      }
    }
    if (!known) throw UsageError("decision JSON: unknown outcome '" + outcome + "'");
    d.budget_exhausted = j.at("budget_exhausted").get<bool>();
    if (j.contains("elapsed_ms")) d.elapsed = std::chrono::milliseconds(j.at("elapsed_ms").get<long long>());
    if (!j.at("ranking").is_null()) d.ranking = ranking_from(j.at("ranking"), &g);
    return d;
  });
}

std::string to_json(const Certificate& c) {
  return json{{"ranking", ranking_json(c.ranking, true)}, {"chain", steps_json(c.steps)}}.dump();
}

Certificate certificate_from_json(const std::string& text) {
  return guarded("certificate JSON", [&] {
    const json j = parse(text, "certificate JSON");
    return Certificate{ranking_from(j.at("ranking"), nullptr), steps_from(j.at("chain"))};
  });
}

}  // namespace rankgrid
