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

#include "percert/io.hpp"

#include <fstream>
#include <sstream>

#include "percert/error.hpp"

namespace percert {

namespace {

[[noreturn]] void fail(ErrorCode code, std::string_view module, const std::string& what) {
  throw Error(code, std::string(module), what);
}

Atom atom_from_json(const json& j) {
  if (j.is_number_integer()) return Atom{j.get<std::int64_t>()};
  if (j.is_string()) return Atom{j.get<std::string>()};
  fail(ErrorCode::parse, "graph-core", "label atoms must be strings or integers, got " + j.dump());
}

json atom_to_json(const Atom& a) {
  if (const auto* i = std::get_if<std::int64_t>(&a)) return *i;
  return std::get<std::string>(a);
}

std::size_t vertex_of(const Graph& g, const json& label, std::string_view module) {
  auto v = g.find(label_from_json(label));
  if (!v) fail(ErrorCode::parse, module, "unknown vertex " + label.dump());
  return *v;
}

std::size_t edge_of(const Graph& g, const json& pair, std::string_view module) {
  if (!pair.is_array() || pair.size() != 2)
    fail(ErrorCode::parse, module, "an edge must be a two-element array, got " + pair.dump());
  const auto u = vertex_of(g, pair[0], module);
  const auto v = vertex_of(g, pair[1], module);
  auto e = g.edge_index(u, v);
  if (!e) fail(ErrorCode::parse, module, "not an edge of the graph: " + pair.dump());
  return *e;
}

json edge_to_json(const Graph& g, std::size_t e) {
  return json::array({label_to_json(g.label(g.edge(e).u)), label_to_json(g.label(g.edge(e).v))});
}

}  // namespace

json label_to_json(const VertexLabel& label) {
  if (label.arity() == 1) return atom_to_json(label.path.front());
  json out = json::array();
  for (const auto& a : label.path) out.push_back(atom_to_json(a));
  return out;
}

VertexLabel label_from_json(const json& j) {
  if (!j.is_array()) return VertexLabel({atom_from_json(j)});
  if (j.empty()) fail(ErrorCode::parse, "graph-core", "empty label array");
  std::vector<Atom> path;
  for (const auto& a : j) path.push_back(atom_from_json(a));
  return VertexLabel(std::move(path));
}

json graph_to_json(const Graph& g) {
  json vs = json::array();
  for (const auto& l : g.labels()) vs.push_back(label_to_json(l));
  json es = json::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e) es.push_back(edge_to_json(g, e));
  return json{{"vertices", vs}, {"edges", es}};
}

Graph graph_from_json(const json& j, std::string name) {
  if (!j.is_object()) fail(ErrorCode::parse, "graph-core", "graph file must be a JSON object");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    fail(ErrorCode::parse, "graph-core", "graph file needs a \"vertices\" array");
  if (!j.contains("edges") || !j["edges"].is_array())
    fail(ErrorCode::parse, "graph-core", "graph file needs an \"edges\" array");
  std::vector<VertexLabel> labels;
  std::map<VertexLabel, std::size_t> index;
  for (const auto& v : j["vertices"]) {
    labels.push_back(label_from_json(v));
    if (!index.emplace(labels.back(), labels.size() - 1).second)
      fail(ErrorCode::parse, "graph-core", "duplicate vertex " + v.dump());
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      fail(ErrorCode::parse, "graph-core", "edges entries must be [u, v] pairs, got " + e.dump());
    auto a = index.find(label_from_json(e[0]));
    auto b = index.find(label_from_json(e[1]));
    if (a == index.end() || b == index.end())
      fail(ErrorCode::parse, "graph-core", "edge " + e.dump() + " names an unknown vertex");
    edges.emplace_back(a->second, b->second);
  }
  GraphProvenance prov;
  prov.kind = FamilyKind::file;
  prov.name = std::move(name);
  try {
    return Graph(std::move(labels), std::move(edges), std::move(prov));
  } catch (const Error& e) {
    fail(ErrorCode::parse, "graph-core", e.what());
  }
}

json read_json_file(const std::string& path, std::string_view module) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, module, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    fail(ErrorCode::parse, module, path + ": " + e.what());
  }
}

Graph load_graph_file(const std::string& path) {
  return graph_from_json(read_json_file(path, "graph-core"), "file:" + path);
}

json colouring_to_json(const Graph& g, const EdgeColouring& c) {
  json out = json::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    out.push_back(json{{"edge", edge_to_json(g, e)}, {"colour", format_rational(c[e])}});
  return out;
}

EdgeColouring colouring_from_json(const Graph& g, const json& j) {
  if (!j.is_array()) fail(ErrorCode::parse, "colouring", "colouring file must be an array");
  std::vector<std::optional<Rational>> slots(g.edge_count());
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("edge") || !entry.contains("colour"))
      fail(ErrorCode::parse, "colouring", "entries need \"edge\" and \"colour\": " + entry.dump());
    const auto e = edge_of(g, entry["edge"], "colouring");
    const auto& col = entry["colour"];
    Rational q;
    if (col.is_string()) q = parse_rational(col.get<std::string>());
    else if (col.is_number_integer()) q = Rational(col.get<long>());
    else fail(ErrorCode::parse, "colouring", "colour must be a \"p/q\" string or integer");
    if (slots[e]) fail(ErrorCode::parse, "colouring", "edge coloured twice: " + entry["edge"].dump());
    slots[e] = q;
  }
  std::vector<Rational> colours;
  for (std::size_t e = 0; e < slots.size(); ++e) {
    if (!slots[e]) fail(ErrorCode::parse, "colouring", "edge " + edge_to_json(g, e).dump() + " has no colour");
    colours.push_back(*slots[e]);
  }
  EdgeColouring c(std::move(colours));
  if (!is_proper(g, c)) fail(ErrorCode::precondition, "colouring", "colouring is not proper");
  return c;
}

json edge_set_to_json(const Graph& g, const EdgeSet& s) {
  json out = json::array();
  for (auto e : s.members()) out.push_back(edge_to_json(g, e));
  return out;
}

EdgeSet edge_set_from_json(const Graph& g, const json& j) {
  if (!j.is_array()) fail(ErrorCode::parse, "percolation", "edge set must be an array of [u, v]");
  EdgeSet s(g.edge_count());
  for (const auto& pair : j) s.insert(edge_of(g, pair, "percolation"));
  return s;
}

json polyvector_to_json(const Graph& g, const PolyVector& p) {
  json out = json::object();
  for (std::size_t v = 0; v < p.size(); ++v) {
    json co = json::array();
    for (const auto& c : p[v].coefficients()) co.push_back(format_rational(c));
    out[g.label(v).to_string()] = co;
  }
  return out;
}

json trace_to_json(const Graph& g, const PercolationTrace& t) {
  json rounds = json::array();
  for (const auto& r : t.rounds) rounds.push_back(edge_set_to_json(g, r));
  return json{{"initial", edge_set_to_json(g, t.initial)},
              {"rounds", rounds},
              {"final", edge_set_to_json(g, t.final)},
              {"percolates", t.final.size() == g.edge_count()}};
}

json certified_to_json(const Graph& g, const CertifiedValue& cv) {
  json out;
  out["value"] = cv.value ? json(*cv.value) : json(nullptr);
  out["status"] = cert_status_name(cv.status);
  out["graph"] = cv.graph_id;
  out["r"] = cv.r;
  out["lower"] = json{{"value", cv.lower}, {"source", cv.lower_source}};
  out["upper"] = json{{"value", cv.upper}, {"source", cv.upper_source}};
  out["witness_size"] = cv.witness.size();
  out["witness"] = edge_set_to_json(g, cv.witness);
  return out;
}

json formula_to_json(const FormulaResult& f) {
  return json{{"value", f.value}, {"kind", formula_kind_name(f.kind)}, {"hypothesis", f.hypothesis}};
}

json plan_to_json(const Graph& g, const EdgeSet& witness, const ConstructionPlan& plan, int r) {
  json base = json::object();
  for (const auto& [copy, s] : plan.base_sets) base[std::to_string(copy)] = s.size();
  return json{{"edges", edge_set_to_json(g, witness)},
              {"size", witness.size()},
              {"percolates", plan.percolates},
              {"formula_size", plan.formula_size},
              {"r", r},
              {"base_set_sizes", base},
              {"cross_edges", plan.cross_edges.size()}};
}

json family_report_to_json(const WitnessFamily& f, const FamilyReport& rep, std::int64_t formula_value) {
  json groups = json::object();
  for (const auto& [k, v] : f.group_counts()) groups[k] = v;
  json failures = json::array();
  for (const auto& s : rep.failures) failures.push_back(s);
  const bool ok = rep.ok(f.claimed_dimension) &&
                  static_cast<std::int64_t>(f.claimed_dimension) == formula_value;
  return json{{"host", f.host.id()},
              {"r", f.r},
              {"members", f.members.size()},
              {"claimed_dimension", f.claimed_dimension},
              {"rank", rep.rank},
              {"members_in_w", rep.members_in_w},
              {"x_members_vanish", rep.x_members_vanish},
              {"formula_value", formula_value},
              {"groups", groups},
              {"ok", ok},
              {"failures", failures}};
}

}  // namespace percert
