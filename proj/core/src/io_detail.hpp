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

#ifndef RANKGRID_SRC_IO_DETAIL_HPP_
#define RANKGRID_SRC_IO_DETAIL_HPP_

#include <json.hpp>
#include <string>
#include <vector>

#include "rankgrid/construct.hpp"

namespace rankgrid::detail {

nlohmann::json parse(const std::string& text, const std::string& what);
nlohmann::json shape_json(const GraphShape& s);
GraphShape shape_from(const nlohmann::json& j);
nlohmann::json graph_json(const Graph& g);
Graph graph_from(const nlohmann::json& j);
nlohmann::json ranking_json(const Ranking& r, bool embed_graph);
Ranking ranking_from(const nlohmann::json& j, const Graph* graph);
nlohmann::json steps_json(const std::vector<ChainStep>& steps);
std::vector<ChainStep> steps_from(const nlohmann::json& j);

}  // namespace rankgrid::detail

#endif  // RANKGRID_SRC_IO_DETAIL_HPP_
