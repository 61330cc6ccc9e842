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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <thread>

#include "doctest.h"
#include "json.hpp"
#include "percert/percert.h"

using nlohmann::json;

namespace {

json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  percert_string_free(s);
  return j;
}

percert_graph* graph(const char* spec) {
  percert_graph* g = nullptr;
  REQUIRE(percert_graph_from_spec(spec, &g) == PERCERT_OK);
  return g;
}

}  // namespace

TEST_CASE("graph handles") {
  percert_graph* g = graph("prod(star(2),star(2))");
  size_t v = 0;
  size_t e = 0;
  CHECK(percert_graph_counts(g, &v, &e) == PERCERT_OK);
  CHECK(v == 9);
  CHECK(e == 12);
  char* out = nullptr;
  CHECK(percert_graph_json(g, &out) == PERCERT_OK);
  CHECK(take(out)["id"] == "prod(star(2),star(2))");
  percert_graph_free(g);
  percert_graph_free(nullptr);
}

TEST_CASE("errors") {
  percert_graph* g = nullptr;
  CHECK(percert_graph_from_spec("theta(3,4)", &g) == PERCERT_ERR_PARAMETER);
  CHECK(g == nullptr);
  const json err = json::parse(percert_last_error());
  CHECK(err["error"]["code"] == "parameter");
  CHECK(err["error"]["module"] == "graph-core");
  CHECK(percert_graph_from_spec("path(", &g) == PERCERT_ERR_PARSE);
  CHECK(percert_graph_from_spec(nullptr, &g) == PERCERT_ERR_NULL_ARGUMENT);
  CHECK(percert_graph_from_spec("path(2)", nullptr) == PERCERT_ERR_NULL_ARGUMENT);

  char* out = nullptr;
  CHECK(percert_dim_w(nullptr, 1, nullptr, 0, &out) == PERCERT_ERR_PARAMETER);
  CHECK(out == nullptr);
  g = graph("path(3)");
  CHECK(percert_dim_w(g, 1, "rainbow", 0, &out) == PERCERT_ERR_PARAMETER);
  CHECK(percert_me(g, 1, 99, nullptr, &out) == PERCERT_ERR_PARAMETER);
  CHECK(percert_percolate(g, 1, "/nonexistent/seed.json", &out) == PERCERT_ERR_IO);
  percert_graph* cyc = graph("prod(path(2),cycle(4))");
  CHECK(percert_construct(cyc, 2, -1, &out) == PERCERT_ERR_PRECONDITION);
  percert_graph_free(cyc);
  CHECK(std::string(percert_status_name(PERCERT_ERR_CAP_EXCEEDED)) == "cap-exceeded");
  CHECK(percert_graph_counts(g, nullptr, nullptr) == PERCERT_OK);
  CHECK(std::string(percert_last_error()).empty());
  percert_graph_free(g);
}

TEST_CASE("errors are per thread") {
  percert_graph* g = nullptr;
  CHECK(percert_graph_from_spec("path(", &g) == PERCERT_ERR_PARSE);
  std::string other;
  std::thread([&] { other = percert_last_error(); }).join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(percert_last_error()).empty());
}

TEST_CASE("me and dimw") {
  percert_graph* g = graph("prod(path(2),path(3))");
  char* out = nullptr;
  int certified = 0;
  REQUIRE(percert_me(g, 2, -1, &certified, &out) == PERCERT_OK);
  const json me = take(out);
  CHECK(me["value"] == 5);
  CHECK(me["status"] == "certified-exact");
  CHECK(me["lower"]["value"] == 5);
  CHECK(me["witness_size"] == 5);
  CHECK(certified == 1);
  percert_graph_free(g);

  g = graph("theta(4,4)");
  REQUIRE(percert_dim_w(g, 2, "greedy", 1, &out) == PERCERT_OK);
  const json d = take(out);
  CHECK(d["dim"] == 5);
  CHECK(d["basis"].size() == 5);
  REQUIRE(percert_dim_w(g, 2, "structural", 0, &out) == PERCERT_OK);
  CHECK(take(out)["dim"] == 5);
  percert_graph_free(g);
}

TEST_CASE("construct and witness") {
  percert_graph* g = graph("prod(star(2),star(2))");
  char* out = nullptr;
  REQUIRE(percert_construct(g, 2, -1, &out) == PERCERT_OK);
  const json c = take(out);
  CHECK(c["size"] == 6);
  CHECK(c["formula_size"] == 6);
  CHECK(c["percolates"] == true);
  CHECK(c["edges"].size() == 6);

  REQUIRE(percert_witness(g, 2, "star", nullptr, &out) == PERCERT_OK);
  const json w = take(out);
  CHECK(w["ok"] == true);
  CHECK(w["claimed_dimension"] == 6);
  CHECK(w["formula_value"] == 6);
  CHECK(percert_witness(g, 2, "theta", nullptr, &out) == PERCERT_ERR_PRECONDITION);
  REQUIRE(percert_witness(g, 2, "tree", nullptr, &out) == PERCERT_OK);
  CHECK(take(out)["ok"] == true);
  percert_graph_free(g);
}

TEST_CASE("formulas") {
  char* out = nullptr;
  const int a[] = {2, 2};
  REQUIRE(percert_formula_stars(a, 2, 2, &out) == PERCERT_OK);
  CHECK(take(out)["value"] == 6);
  const int k[] = {4, 5};
  const int l[] = {4, 4};
  REQUIRE(percert_formula_theta(k, l, 1, 2, &out) == PERCERT_OK);
  CHECK(take(out)["value"] == 5);
  CHECK(percert_formula_theta(l, k, 2, 2, &out) == PERCERT_ERR_PARAMETER);

  percert_graph* g = graph("path(2)");
  percert_graph* t = graph("path(3)");
  REQUIRE(percert_formula_tree_product(g, t, 2, -1, &out) == PERCERT_OK);
  const json tp = take(out);
  CHECK(tp["exact"]["value"] == 5);
  CHECK(tp["exact"]["kind"] == "exact");
  CHECK(tp["bounds_match"] == true);
  percert_graph_free(g);
  percert_graph_free(t);
}

TEST_CASE("verify") {
  char* out = nullptr;
  int consistent = 0;
  REQUIRE(percert_verify("stars", 3, 2, -1, 1, &consistent, &out) == PERCERT_OK);
  const std::string csv = out;
  percert_string_free(out);
  CHECK(consistent == 1);
  CHECK(csv.rfind("instance,dim_w,formula,construction,brute_force,status\n", 0) == 0);
  REQUIRE(percert_verify("paths", 4, 2, -1, 0, &consistent, &out) == PERCERT_OK);
  CHECK(take(out)["rows"].size() == 3);
  CHECK(percert_verify("cycles", 4, 2, -1, 0, nullptr, &out) == PERCERT_ERR_PARAMETER);
}
