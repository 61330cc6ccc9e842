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

#include "percert/percert.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "percert/certifier.hpp"
#include "percert/colouring.hpp"
#include "percert/error.hpp"
#include "percert/formulas.hpp"
#include "percert/io.hpp"
#include "percert/percolation.hpp"
#include "percert/spec_parser.hpp"
#include "percert/verify.hpp"
#include "percert/witness.hpp"

struct percert_graph {
  percert::Graph graph;
};

namespace {

using percert::ErrorCode;
using percert::json;

thread_local std::string last_error;

percert_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return PERCERT_ERR_PARSE;
    case ErrorCode::parameter: return PERCERT_ERR_PARAMETER;
    case ErrorCode::precondition: return PERCERT_ERR_PRECONDITION;
    case ErrorCode::io: return PERCERT_ERR_IO;
    case ErrorCode::cap_exceeded: return PERCERT_ERR_CAP_EXCEEDED;
    case ErrorCode::internal: return PERCERT_ERR_INTERNAL;
  }
  return PERCERT_ERR_INTERNAL;
}

percert_status record(percert_status s, const std::string& code, const std::string& module,
                      const std::string& message) {
  last_error = json{{"error", {{"code", code}, {"module", module}, {"message", message}}}}.dump();
  return s;
}

[[noreturn]] void null_argument(const char* what) {
  throw percert::Error(ErrorCode::parameter, "capi", std::string(what) + " must not be NULL");
}

// Runs body, mapping exceptions to a status and the thread's error record.
template <typename F>
percert_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return PERCERT_OK;
  } catch (const percert::Error& e) {
    return record(status_of(e.code()), percert::error_code_name(e.code()), e.module(), e.what());
  } catch (const std::bad_alloc&) {
    return record(PERCERT_ERR_INTERNAL, "internal", "capi", "out of memory");
  } catch (const std::exception& e) {
    return record(PERCERT_ERR_INTERNAL, "internal", "capi", e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) { *out = dup(s); }
void emit(char** out, const json& j) { *out = dup(j.dump()); }

const percert::Graph& graph_of(const percert_graph* g) {
  if (!g) null_argument("graph");
  return g->graph;
}

void check_out(char** out) {
  if (!out) null_argument("out");
  *out = nullptr;
}

percert::CertifierConfig config(long max_bruteforce) {
  percert::CertifierConfig cfg = percert::CertifierConfig::from_env();
  if (max_bruteforce >= 0) {
    if (static_cast<unsigned long>(max_bruteforce) > percert::kMaxBruteforceCap)
      throw percert::Error(ErrorCode::parameter, "certifier",
                           "--max-bruteforce must be at most " + std::to_string(percert::kMaxBruteforceCap));
    cfg.bruteforce_cap = static_cast<std::size_t>(max_bruteforce);
  }
  return cfg;
}

std::pair<std::string, percert::EdgeColouring> resolve_colouring(const percert::Graph& g, const char* name) {
  const std::string n = name ? name : "greedy";
  if (n == "greedy") return {n, percert::greedy_proper_colouring(g)};
  if (n == "structural") {
    auto c = percert::structural_colouring(g);
    if (!c) throw percert::Error(ErrorCode::precondition, "colouring",
                                 "no structural colouring: graph is not a product of paths, trees, stars or theta graphs");
    return {n, std::move(*c)};
  }
  if (n.rfind("file:", 0) == 0) {
    const std::string path = n.substr(5);
    return {n, percert::colouring_from_json(g, percert::read_json_file(path, "colouring"))};
  }
  throw percert::Error(ErrorCode::parameter, "colouring",
                       "unknown colouring '" + n + "' (greedy|structural|file:PATH)");
}

std::int64_t dim_or_zero(const percert::Graph& g, const percert::EdgeColouring& c, int r) {
  return r <= 0 ? 0 : percert::dim_w(g, c, r);
}

}  // namespace

extern "C" {

const char* percert_version(void) { return "0.1.0"; }

const char* percert_status_name(percert_status status) {
  switch (status) {
    case PERCERT_OK: return "ok";
    case PERCERT_ERR_PARSE: return "parse";
    case PERCERT_ERR_PARAMETER: return "parameter";
    case PERCERT_ERR_PRECONDITION: return "precondition";
    case PERCERT_ERR_IO: return "io";
    case PERCERT_ERR_CAP_EXCEEDED: return "cap-exceeded";
    case PERCERT_ERR_INTERNAL: return "internal";
    case PERCERT_ERR_NULL_ARGUMENT: return "null-argument";
  }
  return "unknown";
}

const char* percert_last_error(void) { return last_error.c_str(); }

void percert_string_free(char* s) { std::free(s); }

percert_status percert_graph_from_spec(const char* spec, percert_graph** out) {
  if (!out) return record(PERCERT_ERR_NULL_ARGUMENT, "null-argument", "capi", "out must not be NULL");
  *out = nullptr;
  if (!spec) return record(PERCERT_ERR_NULL_ARGUMENT, "null-argument", "capi", "spec must not be NULL");
  return guarded([&] { *out = new percert_graph{percert::parse_spec(spec)}; });
}

void percert_graph_free(percert_graph* g) { delete g; }

percert_status percert_graph_counts(const percert_graph* g, size_t* vertices, size_t* edges) {
  return guarded([&] {
    const auto& graph = graph_of(g);
    if (vertices) *vertices = graph.vertex_count();
    if (edges) *edges = graph.edge_count();
  });
}

percert_status percert_graph_json(const percert_graph* g, char** out) {
  return guarded([&] {
    check_out(out);
    json j = percert::graph_to_json(graph_of(g));
    j["id"] = g->graph.id();
    emit(out, j);
  });
}

percert_status percert_dim_w(const percert_graph* g, int r, const char* colouring, int with_basis,
                             char** out) {
  return guarded([&] {
    check_out(out);
    const auto& graph = graph_of(g);
    const auto [name, c] = resolve_colouring(graph, colouring);
    json j{{"dim", percert::dim_w(graph, c, r)}, {"graph", graph.id()}, {"r", r}, {"colouring", name}};
    if (with_basis) {
      json basis = json::array();
      for (const auto& m : percert::basis_of_w(graph, c, r).members)
        basis.push_back(percert::polyvector_to_json(graph, m.entries));
      j["basis"] = std::move(basis);
    }
    emit(out, j);
  });
}

percert_status percert_percolate(const percert_graph* g, int r, const char* seed_path, char** out) {
  return guarded([&] {
    check_out(out);
    if (!seed_path) null_argument("seed_path");
    const auto& graph = graph_of(g);
    const auto seed = percert::edge_set_from_json(graph, percert::read_json_file(seed_path, "percolation"));
    json j = percert::trace_to_json(graph, percert::closure(graph, seed, r));
    j["r"] = r;
    emit(out, j);
  });
}

percert_status percert_me(const percert_graph* g, int r, long max_bruteforce, int* certified, char** out) {
  return guarded([&] {
    check_out(out);
    const auto& graph = graph_of(g);
    const auto cv = percert::certify_me(graph, r, config(max_bruteforce));
    if (certified) *certified = cv.status != percert::CertStatus::bounded;
    emit(out, percert::certified_to_json(graph, cv));
  });
}

percert_status percert_construct(const percert_graph* g, int r, long max_bruteforce, char** out) {
  return guarded([&] {
    check_out(out);
    const auto& graph = graph_of(g);
    const auto pc = percert::construct_product(graph, r, config(max_bruteforce));
    json j = percert::plan_to_json(graph, pc.witness, pc.plan, r);
    j["factor"] = percert::split_kind_name(pc.split.kind);
    j["prefix"] = pc.split.prefix.id();
    emit(out, j);
  });
}

percert_status percert_witness(const percert_graph* g, int r, const char* family, const char* colouring,
                               char** out) {
  return guarded([&] {
    check_out(out);
    if (!family) null_argument("family");
    const auto& graph = graph_of(g);
    const std::string fam = family;
    auto split = percert::split_last_factor(graph);
    if (!split)
      throw percert::Error(ErrorCode::precondition, "witness-space",
                           "graph is not a DSL product ending in a tree, star or theta factor");
    const percert::Graph& base = split->prefix;
    const auto [name, c] = resolve_colouring(base, colouring);
    const auto hg = percert::degree_histogram(base);
    percert::WitnessFamily wf;
    std::int64_t formula = 0;
    if (fam == "tree") {
      if (!percert::is_tree(*split->factor))
        throw percert::Error(ErrorCode::precondition, "witness-space", "last factor is not a tree");
      const auto rooted = split->rooted ? *split->rooted : percert::root_tree_at_leaf(*split->factor);
      wf = percert::tree_witness_family(base, c, rooted, r);
      formula = percert::formula_tree_lower(dim_or_zero(base, c, r), dim_or_zero(base, c, r - 1), hg,
                                            percert::degree_histogram(rooted.tree),
                                            static_cast<int>(rooted.order()), r)
                    .value;
    } else if (fam == "star") {
      if (split->kind != percert::LastFactorSplit::star)
        throw percert::Error(ErrorCode::precondition, "witness-space", "last factor is not a star");
      wf = percert::star_witness_family(base, c, split->k, r);
      formula = percert::formula_star_general(dim_or_zero(base, c, r), dim_or_zero(base, c, r - 1), hg,
                                              split->k, r, nullptr)
                    .value;
    } else if (fam == "theta") {
      if (split->kind != percert::LastFactorSplit::theta)
        throw percert::Error(ErrorCode::precondition, "witness-space", "last factor is not a theta graph");
      const auto& spec = *split->spec;
      wf = percert::theta_witness_family(base, c, spec, r);
      formula = percert::formula_theta_general(dim_or_zero(base, c, r), dim_or_zero(base, c, r - 1),
                                               dim_or_zero(base, c, r - 2), hg, spec.k(), spec.l(), r,
                                               nullptr)
                    .value;
    } else {
      throw percert::Error(ErrorCode::parameter, "witness-space",
                           "unknown family '" + fam + "' (tree|star|theta)");
    }
    const auto report = percert::verify_family(wf, base, c);
    json j = percert::family_report_to_json(wf, report, formula);
    j["family"] = fam;
    j["base_colouring"] = name;
    emit(out, j);
  });
}

percert_status percert_formula_stars(const int* leaves, size_t count, int r, char** out) {
  return guarded([&] {
    check_out(out);
    if (!leaves && count > 0) null_argument("leaves");
    emit(out, percert::formula_to_json(percert::formula_star_product(std::vector<int>(leaves, leaves + count), r)));
  });
}

percert_status percert_formula_theta(const int* k, const int* l, size_t count, int r, char** out) {
  return guarded([&] {
    check_out(out);
    if ((!k || !l) && count > 0) null_argument("k/l");
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < count; ++i) pairs.emplace_back(k[i], l[i]);
    emit(out, percert::formula_to_json(percert::formula_theta_product(pairs, r)));
  });
}

percert_status percert_formula_tree_product(const percert_graph* g, const percert_graph* t, int r,
                                            long max_bruteforce, char** out) {
  return guarded([&] {
    check_out(out);
    const auto rep = percert::tree_product_formulas(graph_of(g), graph_of(t), r, config(max_bruteforce));
    emit(out, json{{"upper", percert::formula_to_json(rep.upper)},
                   {"lower", percert::formula_to_json(rep.lower)},
                   {"exact", percert::formula_to_json(rep.exact)},
                   {"bounds_match", rep.bounds_match}});
  });
}

percert_status percert_verify(const char* family, int max_n, int r, long max_bruteforce, int csv,
                              int* consistent, char** out) {
  return guarded([&] {
    check_out(out);
    if (!family) null_argument("family");
    const auto rows = percert::verify_table(percert::parse_verify_family(family), max_n, r, config(max_bruteforce));
    bool all = true;
    for (const auto& row : rows) all = all && row.consistent();
    if (consistent) *consistent = all;
    if (csv) {
      emit(out, percert::verify_csv(rows));
      return;
    }
    json table = json::array();
    const auto opt = [](const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); };
    for (const auto& row : rows)
      table.push_back(json{{"instance", row.instance},
                           {"dim_w", row.dim_w},
                           {"formula", opt(row.formula)},
                           {"construction", opt(row.construction)},
                           {"brute_force", opt(row.brute_force)},
                           {"status", row.status}});
    emit(out, json{{"family", family}, {"r", r}, {"rows", table}});
  });
}

}  // extern "C"
