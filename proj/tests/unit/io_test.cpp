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

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "percert/colouring.hpp"
#include "percert/error.hpp"
#include "percert/io.hpp"
#include "percert/spec_parser.hpp"

using namespace percert;

namespace {

ErrorCode code_of(const std::string& spec) {
  try {
    parse_spec(spec);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("spec parsed: " << spec);
  return ErrorCode::internal;
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = std::string(PERCERT_TEST_TMP) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("spec DSL") {
  const Graph h = parse_spec("theta(5,4)");
  CHECK(h.vertex_count() == 7);
  CHECK(h.provenance().kind == FamilyKind::theta);
  const Graph p = parse_spec(" prod( star(2) , star(2) ) ");
  CHECK(p.vertex_count() == 9);
  CHECK(p.provenance().factors.size() == 2);
  CHECK(parse_spec("prod(prod(path(2),path(2)),cycle(3))").provenance().factors.size() == 3);
  CHECK(parse_spec("complete(4)").edge_count() == 6);
}

TEST_CASE("spec errors") {
  CHECK(code_of("theta(3,4)") == ErrorCode::parameter);
  CHECK(code_of("theta(4)") == ErrorCode::parse);
  CHECK(code_of("path(2") == ErrorCode::parse);
  CHECK(code_of("blob(2)") == ErrorCode::parse);
  CHECK(code_of("path(2) x") == ErrorCode::parse);
  CHECK(code_of("path(99999999999)") == ErrorCode::parse);
  CHECK(code_of("") == ErrorCode::parse);
  CHECK(code_of("file:/nonexistent/graph.json") == ErrorCode::io);
  try {
    parse_spec("path(2");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 6") != std::string::npos);
    CHECK(e.module() == "cli");
  }
}

TEST_CASE("graph files") {
  const auto path = temp_file("square.json", R"({"vertices":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","d"],["d","a"]]})");
  const Graph g = parse_spec("file:" + path);
  CHECK(g.edge_count() == 4);
  CHECK(g.provenance().kind == FamilyKind::file);
  const Graph pg = parse_spec("prod(path(2),file:" + path + ")");
  CHECK(pg.vertex_count() == 8);

  const Graph back = graph_from_json(graph_to_json(pg));
  CHECK(back.vertex_count() == pg.vertex_count());
  CHECK(back.edge_count() == pg.edge_count());

  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices":["a"]})")), Error);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices":["a","a"],"edges":[]})")), Error);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices":["a","b"],"edges":[["a","z"]]})")), Error);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices":["a"],"edges":[["a","a"]]})")), Error);
  CHECK_THROWS_AS(parse_spec("file:" + temp_file("broken.json", "{not json")), Error);
}

TEST_CASE("colouring files") {
  const Graph g = make_path(3);
  const auto c = greedy_proper_colouring(g);
  CHECK(colouring_from_json(g, colouring_to_json(g, c)) == c);
  const auto fractional = json::parse(R"([{"edge":[0,1],"colour":"1/3"},{"edge":[1,2],"colour":2}])");
  const auto q = colouring_from_json(g, fractional);
  CHECK(q[*g.edge_index(0, 1)] == Rational(1, 3));
  try {
    colouring_from_json(g, json::parse(R"([{"edge":[0,1],"colour":1},{"edge":[1,2],"colour":"1"}])"));
    FAIL("improper colouring accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::precondition);
  }
  CHECK_THROWS_AS(colouring_from_json(g, json::parse(R"([{"edge":[0,1],"colour":1}])")), Error);
  CHECK_THROWS_AS(colouring_from_json(g, json::parse(R"([{"edge":[0,2],"colour":1}])")), Error);
}

TEST_CASE("edge set files") {
  const Graph g = make_cycle(4);
  const auto s = edge_set_from_json(g, json::parse("[[0,1],[3,2]]"));
  CHECK(s.size() == 2);
  CHECK(edge_set_from_json(g, edge_set_to_json(g, s)) == s);
  CHECK_THROWS_AS(edge_set_from_json(g, json::parse("[[0,2]]")), Error);
  CHECK_THROWS_AS(edge_set_from_json(g, json::parse("{}")), Error);
}
