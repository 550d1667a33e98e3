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

#ifndef RANKGRID_IO_HPP_
#define RANKGRID_IO_HPP_

#include <string>

#include "rankgrid/construct.hpp"
#include "rankgrid/ranking.hpp"
#include "rankgrid/solve.hpp"
#include "rankgrid/verify.hpp"

namespace rankgrid {

// JSON serialization. Writers emit compact JSON with sorted keys, so
// parse-then-write reproduces the input byte for byte. Readers throw
// UsageError on malformed input.

std::string to_json(const GraphShape& shape);
GraphShape shape_from_json(const std::string& text);

/// {"coords", "edges", "shape"?, "vertex_count"}.
std::string to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

/// {"graph"?, "graph_hash", "labels"}. With the graph embedded the document
/// is self-contained.
std::string to_json(const Ranking& r, bool embed_graph = true);

/// Reads a ranking. Uses the embedded graph when present, else `graph`;
/// throws UsageError when neither is available or the hash does not match.
Ranking ranking_from_json(const std::string& text, const Graph* graph = nullptr);

/// {"first", "level", "path": [[r,c],...], "second"} with coordinates.
std::string to_json(const Violation& v, const Graph& g);

/// Solver output. `with_elapsed` false drops the timing field so that
/// repeated runs are byte identical.
std::string to_json(const RankResult& r, const Graph& g, bool with_elapsed = true);
RankResult result_from_json(const std::string& text, const Graph& g);

/// {"elapsed_ms"?, "graph_hash", "k", "outcome", "ranking"}; ranking is
/// null unless one was found.
std::string to_json(const DecisionResult& d, const Graph& g, int k, bool with_elapsed = true);
DecisionResult decision_from_json(const std::string& text, const Graph& g);

/// Ranking plus the chain manifest that produced it.
std::string to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

}  // namespace rankgrid

#endif  // RANKGRID_IO_HPP_
