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

#include "percert/constructions.hpp"

#include <string>
#include <utility>
#include <vector>

#include "percert/error.hpp"

namespace percert {

namespace {

constexpr const char* kModule = "constructions";

[[noreturn]] void fail(ErrorCode code, const std::string& what) { throw Error(code, kModule, what); }

// Fetches and checks the supplied set for threshold r.
EdgeSet supplied(const Graph& g, const OptimalSetSupplier& opt, int r) {
  EdgeSet s = opt(r);
  if (s.universe() != g.edge_count())
    fail(ErrorCode::precondition, "supplied set at r=" + std::to_string(r) + " has the wrong universe");
  if (r > 0 && !percolates(g, s, r))
    fail(ErrorCode::precondition, "supplied set does not percolate G at r=" + std::to_string(r));
  return s;
}

class Builder {
 public:
  Builder(const Graph& g, Graph host, std::size_t n) : g_(g), n_(n) {
    plan_.host = std::move(host);
    plan_.factor_order = n;
    plan_.cross_edges = EdgeSet(plan_.host.edge_count());
    plan_.total = EdgeSet(plan_.host.edge_count());
  }

  void place(std::size_t copy, const EdgeSet& s) {
    EdgeSet in_copy(plan_.host.edge_count());
    for (auto e : s.members()) {
      const Edge& ed = g_.edge(e);
      in_copy.insert(*plan_.host.edge_index(ed.u * n_ + copy, ed.v * n_ + copy));
    }
    plan_.total |= in_copy;
    plan_.base_sets[copy] = std::move(in_copy);
  }

  void cross(std::size_t v, std::size_t a, std::size_t b) {
    auto e = plan_.host.edge_index(v * n_ + a, v * n_ + b);
    if (!e) fail(ErrorCode::internal, "repair edge is not a host edge");
    plan_.cross_edges.insert(*e);
    plan_.total.insert(*e);
  }

  ConstructionPlan finish(std::int64_t formula, int r) {
    plan_.formula_size = formula;
    if (static_cast<std::int64_t>(plan_.total.size()) != formula)
      fail(ErrorCode::internal, "construction size " + std::to_string(plan_.total.size()) +
                                    " differs from formula value " + std::to_string(formula));
    plan_.percolates = percolates(plan_.host, plan_.total, r);
    if (!plan_.percolates) fail(ErrorCode::internal, "constructed set does not percolate");
    return std::move(plan_);
  }

 private:
  const Graph& g_;
  std::size_t n_;
  ConstructionPlan plan_;
};

std::int64_t d(const DegreeHistogram& h, int degree) { return degree < 0 ? 0 : h.count(degree); }

}  // namespace

ConstructionPlan construct_tree_product(const Graph& g, const RootedTree& tree, int r,
                                        const OptimalSetSupplier& opt) {
  if (r < 1) fail(ErrorCode::parameter, "r must be positive");
  const std::size_t n = tree.order();
  if (n < 2) fail(ErrorCode::parameter, "tree must have order at least 2");
  const EdgeSet f0 = supplied(g, opt, r);
  const EdgeSet f1 = supplied(g, opt, r - 1);
  Builder b(g, cartesian_product(g, tree.tree), n);
  b.place(0, f0);
  for (std::size_t i = 1; i < n; ++i) b.place(i, f1);

  const DegreeHistogram hg = degree_histogram(g);
  const DegreeHistogram ht = degree_histogram(tree.tree);
  std::int64_t formula = static_cast<std::int64_t>(f0.size()) +
                         static_cast<std::int64_t>(n - 1) * static_cast<std::int64_t>(f1.size()) +
                         d(hg, r - 1);
  for (int t = 1; t <= r - 1; ++t) {
    std::int64_t inner = 1;
    for (int i = t + 1; i <= ht.max_degree(); ++i) inner += t * ht.count(i);
    for (int i = 2; i <= t; ++i) inner += (i - 1) * ht.count(i);
    formula += d(hg, r - 1 - t) * inner;
  }

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const int dv = static_cast<int>(g.degree(v));
    if (dv >= r) continue;
    b.cross(v, 0, 1);
    if (dv == r - 1) continue;
    const int t = r - 1 - dv;
    for (std::size_t a = 0; a < n; ++a) {
      const int da = static_cast<int>(tree.tree.degree(a));
      const auto& kids = tree.children[a];
      std::size_t take = 0;
      if (da > t) take = static_cast<std::size_t>(t);
      else if (da >= 2) take = static_cast<std::size_t>(da - 1);
      for (std::size_t j = 0; j < take && j < kids.size(); ++j) b.cross(v, a, kids[j]);
    }
  }
  return b.finish(formula, r);
}

ConstructionPlan construct_star_product(const Graph& g, int k, int r, const OptimalSetSupplier& opt) {
  if (k < 1) fail(ErrorCode::parameter, "star must have at least one leaf");
  if (r < 1) fail(ErrorCode::parameter, "r must be positive");
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  const EdgeSet f0 = supplied(g, opt, r);
  const EdgeSet f1 = supplied(g, opt, r - 1);
  Builder b(g, cartesian_product(g, make_star(k)), n);
  b.place(0, f0);
  for (std::size_t i = 1; i < n; ++i) b.place(i, f1);

  const DegreeHistogram hg = degree_histogram(g);
  std::int64_t formula = static_cast<std::int64_t>(f0.size()) +
                         k * static_cast<std::int64_t>(f1.size());
  for (int t = 1; t <= k - 1; ++t) formula += t * d(hg, r - t);
  for (int t = k; t <= r; ++t) formula += k * d(hg, r - t);

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const int t = r - static_cast<int>(g.degree(v));
    if (t <= 0) continue;
    const int reach = t >= k ? k : t;
    for (int i = 1; i <= reach; ++i) b.cross(v, 0, static_cast<std::size_t>(i));
  }
  return b.finish(formula, r);
}

ConstructionPlan construct_theta_product(const Graph& g, const ThetaSpec& spec, int r,
                                         const OptimalSetSupplier& opt) {
  if (spec.l() < 4) fail(ErrorCode::parameter, "theta construction requires k >= l >= 4");
  if (r < 2) fail(ErrorCode::parameter, "theta construction requires r >= 2");
  const int k = spec.k();
  const int l = spec.l();
  const std::size_t n = spec.vertex_count();
  const EdgeSet f_r = supplied(g, opt, r);
  const EdgeSet f_r1 = supplied(g, opt, r - 1);
  const EdgeSet f_r2 = supplied(g, opt, r - 2);
  Builder b(g, cartesian_product(g, make_theta(k, l)), n);

  const ThetaIndex one{1, false}, two{2, false}, three{3, false}, ell{l, false}, kp{k, true};
  for (const auto& x : spec.order()) {
    const std::size_t h = spec.vertex_of(x);
    if (x == one) b.place(h, f_r);
    else if (x == ell || x == kp) b.place(h, f_r2);
    else b.place(h, f_r1);
  }

  const DegreeHistogram hg = degree_histogram(g);
  const std::int64_t kl = k + l;
  std::int64_t formula = static_cast<std::int64_t>(f_r.size()) +
                         (kl - 5) * static_cast<std::int64_t>(f_r1.size()) +
                         2 * static_cast<std::int64_t>(f_r2.size()) + d(hg, r - 1) +
                         (kl - 3) * d(hg, r - 2);
  for (int t = 0; t <= r - 3; ++t) formula += (kl - 1) * d(hg, t);

  // H-edges as (x, next(x)) on both cycles
  std::vector<std::pair<ThetaIndex, ThetaIndex>> h_edges;
  for (int i = 1; i <= l; ++i) h_edges.push_back({{i, false}, spec.next({i, false})});
  for (int i = 2; i <= k; ++i) h_edges.push_back({{i, true}, spec.next({i, true})});
  auto is = [&](const std::pair<ThetaIndex, ThetaIndex>& e, ThetaIndex a, ThetaIndex c) {
    const std::size_t x = spec.vertex_of(e.first), y = spec.vertex_of(e.second);
    const std::size_t p = spec.vertex_of(a), q = spec.vertex_of(c);
    return (x == p && y == q) || (x == q && y == p);
  };

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const int dv = static_cast<int>(g.degree(v));
    if (dv >= r) continue;
    if (dv == r - 1) {
      b.cross(v, spec.vertex_of(one), spec.vertex_of(two));
      continue;
    }
    for (const auto& e : h_edges) {
      if (dv == r - 2 && (is(e, one, kp) || is(e, two, three))) continue;
      b.cross(v, spec.vertex_of(e.first), spec.vertex_of(e.second));
    }
  }
  return b.finish(formula, r);
}

}  // namespace percert
