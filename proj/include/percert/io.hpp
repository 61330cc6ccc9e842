// Copyright 2026 The percert Authors
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

#ifndef PERCERT_IO_HPP
#define PERCERT_IO_HPP

// JSON encodings. Graph file: {"vertices":[...], "edges":[[u,v],...]}.
// A label is a scalar (string or integer) or an array of scalars for
// product vertices. Colouring file: [{"edge":[u,v], "colour":"p/q"}, ...].
// Edge set file: [[u,v], ...].

#include <string>
#include <string_view>

#include <json.hpp>

#include "percert/certifier.hpp"
#include "percert/colouring.hpp"
#include "percert/constructions.hpp"
#include "percert/formulas.hpp"
#include "percert/graph.hpp"
#include "percert/percolation.hpp"
#include "percert/witness.hpp"

namespace percert {

using json = nlohmann::ordered_json;

json label_to_json(const VertexLabel& label);
VertexLabel label_from_json(const json& j);

json graph_to_json(const Graph& g);
/// Parses a graph document. Violations name the offending field.
Graph graph_from_json(const json& j, std::string name = {});
Graph load_graph_file(const std::string& path);

json colouring_to_json(const Graph& g, const EdgeColouring& c);
EdgeColouring colouring_from_json(const Graph& g, const json& j);

json edge_set_to_json(const Graph& g, const EdgeSet& s);
EdgeSet edge_set_from_json(const Graph& g, const json& j);

json read_json_file(const std::string& path, std::string_view module);

json polyvector_to_json(const Graph& g, const PolyVector& p);

json trace_to_json(const Graph& g, const PercolationTrace& t);
json certified_to_json(const Graph& g, const CertifiedValue& cv);
json formula_to_json(const FormulaResult& f);
json plan_to_json(const Graph& g, const EdgeSet& witness, const ConstructionPlan& plan, int r);
json family_report_to_json(const WitnessFamily& f, const FamilyReport& rep, std::int64_t formula_value);

}  // namespace percert

#endif  // PERCERT_IO_HPP
