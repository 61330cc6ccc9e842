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

#include "percert/formulas.hpp"

#include <algorithm>
#include <map>

#include "percert/error.hpp"

namespace percert {

namespace {

constexpr const char* kModule = "formulas";

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::parameter, kModule, what); }

std::int64_t d(const DegreeHistogram& h, int degree) { return degree < 0 ? 0 : h.count(degree); }

void check_tree_args(int n, int r) {
  if (n < 2) fail("tree must have order at least 2, got n=" + std::to_string(n));
  if (r < 1) fail("r must be positive, got r=" + std::to_string(r));
}

// Degree-dependent part of the tree upper bound.
std::int64_t tree_upper_tail(const DegreeHistogram& hg, const DegreeHistogram& ht, int r) {
  std::int64_t out = d(hg, r - 1);
  for (int t = 1; t <= r - 1; ++t) {
    std::int64_t inner = 1;
    for (int i = t + 1; i <= ht.max_degree(); ++i) inner += t * ht.count(i);
    for (int i = 2; i <= t; ++i) inner += (i - 1) * ht.count(i);
    out += d(hg, r - 1 - t) * inner;
  }
  return out;
}

std::int64_t tree_lower_tail(const DegreeHistogram& hg, const DegreeHistogram& ht, int r) {
  std::int64_t branch = 1;
  for (int i = 2; i <= ht.max_degree(); ++i) branch += ht.count(i);
  std::int64_t out = d(hg, r - 1);
  for (int t = 0; t <= r - 2; ++t) out += d(hg, t) * branch;
  return out;
}

std::int64_t path_value(std::int64_t me_r, std::int64_t me_r1, const DegreeHistogram& hg, int n, int r) {
  std::int64_t out = me_r + (n - 1) * me_r1 + d(hg, r - 1);
  for (int t = 0; t <= r - 2; ++t) out += (n - 1) * d(hg, t);
  return out;
}

std::int64_t star_value(std::int64_t me_r, std::int64_t me_r1, const DegreeHistogram& hg, int k, int r) {
  std::int64_t out = me_r + k * me_r1;
  for (int t = 1; t <= k - 1; ++t) out += t * d(hg, r - t);
  for (int t = k; t <= r; ++t) out += k * d(hg, r - t);
  return out;
}

std::int64_t theta_value(std::int64_t me_r, std::int64_t me_r1, std::int64_t me_r2,
                         const DegreeHistogram& hg, int k, int l, int r) {
  const std::int64_t kl = k + l;
  std::int64_t out = me_r + (kl - 5) * me_r1 + 2 * me_r2 + d(hg, r - 1) + (kl - 3) * d(hg, r - 2);
  for (int t = 0; t <= r - 3; ++t) out += (kl - 1) * d(hg, t);
  return out;
}

void check_theta_args(int k, int l, int r) {
  if (l < 4 || k < l)
    fail("theta formulas require k >= l >= 4, got k=" + std::to_string(k) + ", l=" + std::to_string(l));
  if (r < 2) fail("theta formulas require r >= 2, got r=" + std::to_string(r));
}

FormulaResult with_token(std::int64_t value, const DegreeHistogram& hg, const HypothesisToken* token,
                         std::initializer_list<int> needed) {
  if (token && token->covers(hg, needed)) return {value, FormulaKind::exact, token->describe()};
  std::string need;
  for (int i : needed) need += (need.empty() ? "" : ", ") + std::to_string(i);
  return {value, FormulaKind::upper_bound,
          "no certificate that m_e(G,i) = dim W^i_{G,c} for i in {" + need + "}"};
}

}  // namespace

const char* formula_kind_name(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::exact: return "exact";
    case FormulaKind::upper_bound: return "upper-bound";
    case FormulaKind::lower_bound: return "lower-bound";
  }
  return "?";
}

bool HypothesisToken::covers(const DegreeHistogram& h, std::initializer_list<int> needed) const {
  if (!(h == histogram_)) return false;
  return std::all_of(needed.begin(), needed.end(),
                     [&](int i) { return i <= 0 || thresholds_.count(i) > 0; });
}

std::string HypothesisToken::describe() const {
  std::string ts;
  for (int i : thresholds_) ts += (ts.empty() ? "" : ", ") + std::to_string(i);
  return "m_e(G,i) = dim W^i_{G,c} for i in {" + ts + "} with c = " + colouring_ + ", G = " + graph_id_;
}

FormulaResult formula_tree_upper(std::int64_t me_r, std::int64_t me_r1, const DegreeHistogram& hg,
                                 const DegreeHistogram& ht, int n, int r) {
  check_tree_args(n, r);
  return {me_r + (n - 1) * me_r1 + tree_upper_tail(hg, ht, r), FormulaKind::upper_bound, ""};
}

FormulaResult formula_tree_lower(std::int64_t dim_r, std::int64_t dim_r1, const DegreeHistogram& hg,
                                 const DegreeHistogram& ht, int n, int r) {
  check_tree_args(n, r);
  return {dim_r + (n - 1) * dim_r1 + tree_lower_tail(hg, ht, r), FormulaKind::lower_bound, ""};
}

FormulaResult formula_tree_exact(std::int64_t me_r, std::int64_t me_r1, const DegreeHistogram& hg,
                                 const DegreeHistogram& ht, int n, int r,
                                 const HypothesisToken* token) {
  FormulaResult upper = formula_tree_upper(me_r, me_r1, hg, ht, n, r);
  const bool shape_ok = ht.max_degree() <= 2 || hg.min_degree() >= r - 2;
  if (!shape_ok) {
    upper.hypothesis = "T is not a path and min degree of G is below r-2";
    return upper;
  }
  const std::int64_t value = me_r + (n - 1) * me_r1 + tree_lower_tail(hg, ht, r);
  return with_token(value, hg, token, {r - 1, r});
}

bool bounds_match_predicate(const DegreeHistogram& hg, const DegreeHistogram& ht, int r) {
  return tree_upper_tail(hg, ht, r) == tree_lower_tail(hg, ht, r);
}

FormulaResult formula_star_general(std::int64_t me_r, std::int64_t me_r1, const DegreeHistogram& hg,
                                   int k, int r, const HypothesisToken* token) {
  if (k < 1) fail("star must have at least one leaf");
  if (r < 1) fail("r must be positive");
  return with_token(star_value(me_r, me_r1, hg, k, r), hg, token, {r - 1, r});
}

FormulaResult formula_theta_general(std::int64_t me_r, std::int64_t me_r1, std::int64_t me_r2,
                                    const DegreeHistogram& hg, int k, int l, int r,
                                    const HypothesisToken* token) {
  check_theta_args(k, l, r);
  return with_token(theta_value(me_r, me_r1, me_r2, hg, k, l, r), hg, token, {r - 2, r - 1, r});
}

FormulaResult formula_path_corollary(std::int64_t me_r, std::int64_t me_r1, const DegreeHistogram& hg,
                                     int n, int r, const HypothesisToken* token) {
  check_tree_args(n, r);
  return with_token(path_value(me_r, me_r1, hg, n, r), hg, token, {r - 1, r});
}

std::vector<std::int64_t> product_chain_table(const std::vector<ChainStep>& steps, int r) {
  if (r < 0) fail("r must be non-negative");
  std::vector<std::int64_t> m(static_cast<std::size_t>(r) + 1, 0);
  DegreeHistogram hist(std::map<int, std::int64_t>{{0, 1}});
  for (const auto& s : steps) {
    Graph factor;
    switch (s.kind) {
      case FamilyKind::path:
        if (s.a < 1) fail("path factor needs n >= 1");
        factor = make_path(s.a);
        break;
      case FamilyKind::star:
        if (s.a < 1) fail("star factor needs k >= 1");
        factor = make_star(s.a);
        break;
      case FamilyKind::theta:
        check_theta_args(s.a, s.b, std::max(r, 2));
        factor = make_theta(s.a, s.b);
        break;
      default:
        fail("product chains take only path, star and theta factors");
    }
    if (s.kind == FamilyKind::path && s.a == 1) continue;
    auto at = [&](int i) { return i <= 0 ? std::int64_t{0} : m[static_cast<std::size_t>(i)]; };
    std::vector<std::int64_t> next(m.size(), 0);
    for (int q = 1; q <= r; ++q) {
      switch (s.kind) {
        case FamilyKind::path: next[q] = path_value(at(q), at(q - 1), hist, s.a, q); break;
        case FamilyKind::star: next[q] = star_value(at(q), at(q - 1), hist, s.a, q); break;
        default:
          // connected with at least one edge
          next[q] = q == 1 ? 1 : theta_value(at(q), at(q - 1), at(q - 2), hist, s.a, s.b, q);
      }
    }
    m = std::move(next);
    hist = hist.convolve(degree_histogram(factor));
  }
  return m;
}

FormulaResult formula_product_chain(const std::vector<ChainStep>& steps, int r) {
  const auto table = product_chain_table(steps, std::max(r, 0));
  const std::int64_t value = r <= 0 ? 0 : table[static_cast<std::size_t>(r)];
  return {value, FormulaKind::exact,
          "product of paths, stars and theta graphs H_{k,l} with k >= l >= 4"};
}

FormulaResult formula_star_product(const std::vector<int>& a, int r) {
  if (r < 1) fail("r must be positive");
  std::vector<ChainStep> steps;
  for (int k : a) {
    if (k < 1) fail("every star needs at least one leaf, got " + std::to_string(k));
    steps.push_back({FamilyKind::star, k, 0});
  }
  return formula_product_chain(steps, r);
}

FormulaResult formula_theta_product(const std::vector<std::pair<int, int>>& pairs, int r) {
  if (r < 2) fail("theta products require r >= 2, got r=" + std::to_string(r));
  std::vector<ChainStep> steps;
  for (auto [k, l] : pairs) {
    check_theta_args(k, l, r);
    steps.push_back({FamilyKind::theta, k, l});
  }
  return formula_product_chain(steps, r);
}

}  // namespace percert
