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

#include "doctest.h"
#include "percert/certifier.hpp"
#include "percert/constructions.hpp"
#include "percert/error.hpp"
#include "percert/graph.hpp"
#include "percert/percolation.hpp"

using namespace percert;

namespace {

OptimalSetSupplier supplier_for(const Graph& g) {
  return [g](int r) { return r <= 0 ? EdgeSet(g.edge_count()) : optimal_set_supplier(g, r, CertifierConfig{}); };
}

void check_plan(const ConstructionPlan& plan, std::int64_t size, int r) {
  CHECK(static_cast<std::int64_t>(plan.total.size()) == size);
  CHECK(plan.formula_size == size);
  CHECK(plan.percolates);
  CHECK(percolates(plan.host, plan.total, r));
}

}  // namespace

TEST_CASE("tree products") {
  const Graph k2 = make_path(2);
  check_plan(construct_tree_product(k2, root_tree_at_leaf(make_path(2)), 2, supplier_for(k2)), 4, 2);

  const Graph c4 = make_cycle(4);
  const auto plan = construct_tree_product(c4, root_tree_at_leaf(make_path(2)), 2, supplier_for(c4));
  check_plan(plan, 5, 2);
  CHECK(plan.cross_edges.empty());

  const Graph k1 = make_k1();
  check_plan(construct_tree_product(k1, root_tree_at_leaf(make_star(3)), 1, supplier_for(k1)), 1, 1);

  const Graph s2 = make_star(2);
  for (int r = 1; r <= 4; ++r)
    for (const auto& t : {make_path(3), make_star(3), make_path(4)}) {
      const auto p = construct_tree_product(s2, root_tree_at_leaf(t), r, supplier_for(s2));
      CHECK(p.percolates);
      CHECK(static_cast<std::int64_t>(p.total.size()) == p.formula_size);
    }
}

TEST_CASE("star products") {
  const Graph k1 = make_k1();
  check_plan(construct_star_product(k1, 3, 2, supplier_for(k1)), 2, 2);
  const Graph s2 = make_star(2);
  check_plan(construct_star_product(s2, 2, 2, supplier_for(s2)), 6, 2);
  const Graph c4 = make_cycle(4);
  check_plan(construct_star_product(c4, 1, 2, supplier_for(c4)), 5, 2);
}

TEST_CASE("theta products") {
  const Graph k1 = make_k1();
  check_plan(construct_theta_product(k1, ThetaSpec(4, 4), 2, supplier_for(k1)), 5, 2);
  check_plan(construct_theta_product(k1, ThetaSpec(4, 4), 3, supplier_for(k1)), 7, 3);
  check_plan(construct_theta_product(k1, ThetaSpec(6, 5), 2, supplier_for(k1)), 8, 2);
  const Graph p2 = make_path(2);
  for (int r = 2; r <= 4; ++r) {
    const auto p = construct_theta_product(p2, ThetaSpec(5, 4), r, supplier_for(p2));
    CHECK(p.percolates);
  }
  CHECK_THROWS_AS(construct_theta_product(k1, ThetaSpec(4, 4), 1, supplier_for(k1)), Error);
}

TEST_CASE("bad supplier sets are refused") {
  const Graph p3 = make_path(3);
  const OptimalSetSupplier empty = [&](int) { return EdgeSet(p3.edge_count()); };
  try {
    construct_star_product(p3, 2, 2, empty);
    FAIL("expected a refusal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::precondition);
  }
}
