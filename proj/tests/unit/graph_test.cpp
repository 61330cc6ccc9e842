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

#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "percert/error.hpp"
#include "percert/graph.hpp"

using namespace percert;

namespace {

std::map<int, std::int64_t> hist(const Graph& g) {
  std::map<int, std::int64_t> out;
  const auto h = degree_histogram(g);
  for (int d = 0; d <= h.max_degree(); ++d)
    if (h.count(d)) out[d] = h.count(d);
  return out;
}

}  // namespace

TEST_CASE("families") {
  const Graph p2 = make_path(2);
  CHECK(p2.vertex_count() == 2);
  CHECK(p2.edge_count() == 1);

  const Graph h65 = make_theta(6, 5);
  CHECK(h65.vertex_count() == 9);
  CHECK(h65.edge_count() == 10);
  CHECK(hist(h65) == std::map<int, std::int64_t>{{2, 7}, {3, 2}});

  CHECK(hist(make_star(3)) == std::map<int, std::int64_t>{{1, 3}, {3, 1}});
  CHECK(make_cycle(5).edge_count() == 5);
  CHECK(make_complete(4).edge_count() == 6);
  CHECK(make_k1().edge_count() == 0);
}

TEST_CASE("family bounds") {
  CHECK_THROWS_AS(make_theta(3, 4), Error);
  CHECK_THROWS_AS(make_theta(4, 2), Error);
  CHECK(make_theta(4, 3).edge_count() == 6);
  CHECK_THROWS_AS(make_path(0), Error);
  CHECK_THROWS_AS(make_cycle(2), Error);
  try {
    make_theta(3, 4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parameter);
  }
}

TEST_CASE("theta shape") {
  for (auto [k, l] : {std::pair{4, 4}, {5, 4}, {5, 5}, {7, 4}}) {
    const Graph h = make_theta(k, l);
    CHECK(h.vertex_count() == static_cast<std::size_t>(k + l - 2));
    CHECK(h.edge_count() == static_cast<std::size_t>(k + l - 1));
    const ThetaSpec spec(k, l);
    CHECK(h.degree(spec.vertex_of({1, false})) == 3);
    CHECK(h.degree(spec.vertex_of({2, false})) == 3);
    CHECK(hist(h)[2] == k + l - 4);
    // 1 < 1' < 2 < 2' < 3 < 3' ... with 1', 2' absent from I
    const auto& order = spec.order();
    CHECK(order.size() == h.vertex_count());
    CHECK(order[0] == ThetaIndex{1, false});
    CHECK(order[1] == ThetaIndex{2, false});
    CHECK(order[2] == ThetaIndex{3, false});
    CHECK(order[3] == ThetaIndex{3, true});
    CHECK(spec.canonical({1, true}) == ThetaIndex{1, false});
    CHECK(spec.next({static_cast<int>(l), false}) == ThetaIndex{1, false});
    CHECK(spec.canonical(spec.next({static_cast<int>(k), true})) == ThetaIndex{1, false});
  }
}

TEST_CASE("cartesian product") {
  const Graph g = make_theta(5, 4);
  const Graph kg = cartesian_product(make_k1(), g);
  CHECK(kg.vertex_count() == g.vertex_count());
  CHECK(kg.edge_count() == g.edge_count());

  const Graph c4 = cartesian_product(make_path(2), make_path(2));
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(hist(c4) == std::map<int, std::int64_t>{{2, 4}});

  const Graph s2p2 = cartesian_product(make_star(2), make_path(2));
  CHECK(s2p2.vertex_count() == 6);
  CHECK(s2p2.edge_count() == 7);

  SUBCASE("edge count identity") {
    const Graph f = make_star(3);
    const Graph h = make_cycle(5);
    const Graph fh = cartesian_product(f, h);
    CHECK(fh.edge_count() == f.vertex_count() * h.edge_count() + h.vertex_count() * f.edge_count());
  }

  SUBCASE("labels are tuples") {
    const Graph pp = cartesian_product(cartesian_product(make_path(2), make_path(2)), make_path(3));
    CHECK(pp.label(0).arity() == 3);
    CHECK(pp.vertex_count() == 12);
  }
}

TEST_CASE("degree statistics") {
  CHECK(hist(make_k1()) == std::map<int, std::int64_t>{{0, 1}});
  CHECK(hist(make_star(2)) == std::map<int, std::int64_t>{{1, 2}, {2, 1}});
  CHECK(hist(make_theta(4, 4)) == std::map<int, std::int64_t>{{2, 4}, {3, 2}});

  const Graph g = cartesian_product(make_star(3), make_theta(5, 4));
  const auto h = degree_histogram(g);
  std::int64_t n = 0;
  std::int64_t twice_e = 0;
  for (int d = 0; d <= h.max_degree(); ++d) {
    n += h.count(d);
    twice_e += d * h.count(d);
  }
  CHECK(n == static_cast<std::int64_t>(g.vertex_count()));
  CHECK(twice_e == 2 * static_cast<std::int64_t>(g.edge_count()));
  CHECK(degree_histogram(make_star(3)).convolve(degree_histogram(make_theta(5, 4))) == h);
}

TEST_CASE("simple graphs only") {
  CHECK_THROWS_AS(testing::graph_from_pairs(2, {{0, 0}}), Error);
  CHECK_THROWS_AS(testing::graph_from_pairs(2, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(testing::graph_from_pairs(2, {{0, 2}}), Error);
  std::vector<VertexLabel> dup{VertexLabel::of(1), VertexLabel::of(1)};
  CHECK_THROWS_AS(Graph(dup, {}), Error);
}

TEST_CASE("rooted trees") {
  SUBCASE("path from an end") {
    const auto t = root_tree_at_leaf(make_path(3));
    CHECK(t.level == std::vector<int>{0, 1, 2});
  }
  SUBCASE("star from a leaf") {
    const auto t = root_tree_at_leaf(make_star(3));
    CHECK(t.level == std::vector<int>{0, 1, 2, 2});
    CHECK(t.tree.degree(0) == 1);
    CHECK(t.children[1].size() == 2);
  }
  SUBCASE("spider with legs 1,1,2 from the long leg") {
    // centre 0, legs 0-1, 0-2, 0-3-4
    const Graph spider = testing::graph_from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    const auto t = root_tree_at_leaf(spider, VertexLabel::of(4));
    CHECK(t.original[0] == 4);
    for (std::size_t i = 1; i < t.order(); ++i) {
      CHECK(t.level[i - 1] <= t.level[i]);
      CHECK(t.level[t.parent[i]] == t.level[i] - 1);
    }
    CHECK(t.level.back() == 3);
  }
  CHECK_THROWS_AS(root_tree_at_leaf(make_cycle(4)), Error);
  CHECK_THROWS_AS(root_tree_at_leaf(make_star(3), VertexLabel::of(0)), Error);
}

TEST_CASE("product metadata") {
  const Graph g = product_of({std::make_shared<const Graph>(make_star(2)),
                              std::make_shared<const Graph>(make_theta(4, 4))});
  CHECK(g.provenance().kind == FamilyKind::product);
  CHECK(g.provenance().factors.size() == 2);
  CHECK(g.id() == "prod(star(2),theta(4,4))");
}
