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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "percert/certifier.hpp"
#include "percert/colouring.hpp"
#include "percert/error.hpp"
#include "percert/formulas.hpp"
#include "percert/graph.hpp"
#include "percert/percolation.hpp"
#include "percert/spec_parser.hpp"
#include "percert/witness.hpp"

using namespace percert;

namespace {

// Collects the first few mismatches of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    ++failed_;
    if (notes_.size() < 5) notes_.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream s;
    s << what << ": got " << got << ", want " << want;
    expect(got == want, s.str());
  }
  bool ok() const { return failed_ == 0; }
  std::size_t count() const { return count_; }
  std::string notes() const {
    std::string out;
    for (const auto& n : notes_) out += (out.empty() ? "" : "; ") + n;
    if (failed_ > notes_.size()) out += "; ... " + std::to_string(failed_ - notes_.size()) + " more";
    return out;
  }

 private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> notes_;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<void(Check&)> body;
};

std::string str(std::int64_t v) { return std::to_string(v); }

CertifierConfig config() { return CertifierConfig{}; }

std::int64_t bf(const Graph& g, int r, std::int64_t floor = 0) { return brute_force_me(g, r, floor, 16).value; }

std::int64_t greedy_dim(const Graph& g, int r) { return r <= 0 ? 0 : dim_w(g, greedy_proper_colouring(g), r); }

std::int64_t dim_or_zero(const Graph& g, const EdgeColouring& c, int r) { return r <= 0 ? 0 : dim_w(g, c, r); }

// Graphs with at most 14 edges used by the property criteria.
std::vector<std::string> suite_specs() {
  std::vector<std::string> out;
  for (int n = 2; n <= 7; ++n) out.push_back("path(" + str(n) + ")");
  for (int k = 1; k <= 5; ++k) out.push_back("star(" + str(k) + ")");
  for (int n = 3; n <= 8; ++n) out.push_back("cycle(" + str(n) + ")");
  for (int n = 3; n <= 5; ++n) out.push_back("complete(" + str(n) + ")");
  for (auto [k, l] : {std::pair{4, 4}, {5, 4}, {5, 5}, {6, 4}, {6, 5}, {6, 6}, {7, 7}, {5, 3}})
    out.push_back("theta(" + str(k) + "," + str(l) + ")");
  for (const char* s : {"prod(path(2),path(2))", "prod(path(2),path(3))", "prod(path(2),path(4))", "prod(path(2),path(5))",
                        "prod(path(3),path(3))", "prod(star(2),star(2))", "prod(path(2),star(3))", "prod(star(2),path(2))",
                        "prod(path(2),cycle(4))", "prod(path(2),cycle(3))"})
    out.push_back(s);
  return out;
}

// Greedy colouring on a shuffled edge order, palette relabelled injectively.
EdgeColouring permuted_colouring(const Graph& g, std::mt19937& rng) {
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const EdgeColouring base = greedy_proper_colouring(g, order);
  std::vector<long> values(3 * g.edge_count() + 3);
  std::iota(values.begin(), values.end(), 0);
  std::shuffle(values.begin(), values.end(), rng);
  std::map<Rational, Rational> relabel;
  for (const auto& q : base.palette()) relabel.emplace(q, Rational(values[relabel.size()]));
  std::vector<Rational> out;
  for (std::size_t e = 0; e < base.size(); ++e) out.push_back(relabel.at(base[e]));
  return EdgeColouring(std::move(out));
}

// All labelled trees on n vertices via Pruefer codes.
std::vector<Graph> trees_on(int n) {
  std::vector<Graph> out;
  auto build = [&](const std::vector<int>& code) {
    std::vector<int> degree(n, 1);
    for (int x : code) ++degree[x];
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (int x : code) {
      for (int leaf = 0; leaf < n; ++leaf)
        if (degree[leaf] == 1) {
          edges.emplace_back(leaf, x);
          --degree[leaf];
          --degree[x];
          break;
        }
    }
    std::vector<std::size_t> last;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    std::vector<VertexLabel> labels;
    for (int v = 0; v < n; ++v) labels.push_back(VertexLabel::of(v));
    out.emplace_back(std::move(labels), std::move(edges));
  };
  std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    build(code);
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) break;
  }
  return out;
}

// --- criteria ------------------------------------------------------------

void star_baseline(Check& c) {
  for (int a = 1; a <= 5; ++a)
    for (int r = 1; r <= 5; ++r) {
      const std::string at = "S_" + str(a) + " r=" + str(r);
      const std::int64_t want = std::min(a, r);
      c.equal(bf(make_star(a), r), want, "brute force " + at);
      c.equal(formula_star_product({a}, r).value, want, "formula " + at);
    }
}

void path_baseline(Check& c) {
  const auto k1 = degree_histogram(make_k1());
  for (int n = 2; n <= 7; ++n) {
    const Graph p = make_path(n);
    c.equal(bf(p, 1), 1, "brute force P_" + str(n) + " r=1");
    for (int r = 1; r <= 3; ++r) {
      const std::int64_t want = r == 1 ? 1 : n - 1;
      if (r >= 2) c.equal(bf(p, r), want, "brute force P_" + str(n) + " r=" + str(r));
      c.equal(formula_path_corollary(0, 0, k1, n, r, nullptr).value, want, "corollary P_" + str(n) + " r=" + str(r));
      c.equal(formula_product_chain({{FamilyKind::path, n, 0}}, r).value, want, "chain P_" + str(n) + " r=" + str(r));
    }
  }
}

void grids(Check& c) {
  CertifierConfig no_search = config();
  no_search.bruteforce_cap = 0;
  for (int n = 2; n <= 4; ++n) {
    const Graph g = parse_spec("prod(path(2),path(" + str(n) + "))");
    const std::string at = "P_2 x P_" + str(n);
    const auto cv = certify_me(g, 2, no_search);
    c.expect(cv.status == CertStatus::certified_exact, at + " not certified without enumeration");
    c.equal(cv.lower, n + 2, at + " lower");
    c.equal(cv.upper, n + 2, at + " construction");
    c.expect(cv.lower_source != "forcing", at + " lower bound should come from dim_w");
    c.expect(percolates(g, cv.witness, 2), at + " witness does not percolate");
    if (n <= 3) c.equal(bf(g, 2), n + 2, at + " brute force");
  }
}

void stars_product(Check& c) {
  const Graph g = parse_spec("prod(star(2),star(2))");
  c.equal(formula_star_product({2, 2}, 2).value, 6, "formula");
  c.equal(greedy_dim(g, 2), 6, "dim_w");
  const auto pc = construct_product(g, 2, config());
  c.equal(pc.witness.size(), 6u, "construction size");
  c.expect(percolates(g, pc.witness, 2), "construction does not percolate");
  const auto b = brute_force_me(g, 2, 5, 16);
  c.equal(b.value, 6, "brute force from floor 5");
  c.expect(percolates(g, b.witness, 2), "brute force witness does not percolate");
}

void theta(Check& c) {
  for (auto [k, l] : {std::pair{4, 4}, {5, 4}, {5, 5}}) {
    const Graph h = make_theta(k, l);
    const std::string at = "H_" + str(k) + "," + str(l);
    c.equal(bf(h, 2), k + l - 3, at + " brute force r=2");
    c.equal(greedy_dim(h, 2), k + l - 3, at + " dim_w r=2");
    c.equal(forced_edges(h, 3).size(), static_cast<std::size_t>(k + l - 1), at + " forced r=3");
    c.equal(formula_theta_product({{k, l}}, 3).value, k + l - 1, at + " formula r=3");
  }
  c.equal(bf(make_theta(4, 4), 3), 7, "H_4,4 brute force r=3");
}

void hhq_consistency(Check& c) {
  std::mt19937 rng(20261014);
  const CertifierConfig cfg = config();
  for (const auto& spec : suite_specs()) {
    const Graph g = parse_spec(spec);
    if (g.edge_count() > 14) {
      c.expect(false, spec + " exceeds 14 edges");
      continue;
    }
    std::set<std::vector<Rational>> seen;
    std::vector<EdgeColouring> colourings;
    for (int attempt = 0; colourings.size() < 3 && attempt < 100; ++attempt) {
      EdgeColouring col = permuted_colouring(g, rng);
      std::vector<Rational> key;
      for (std::size_t e = 0; e < col.size(); ++e) key.push_back(col[e]);
      if (seen.insert(key).second) colourings.push_back(std::move(col));
    }
    c.equal(colourings.size(), 3u, spec + " distinct colourings");
    for (int r = 1; r <= 4; ++r) {
      const std::int64_t m = bf(g, r);
      for (const auto& col : colourings) {
        c.expect(is_proper(g, col), spec + " colouring not proper");
        const std::int64_t d = dim_w(g, col, r);
        c.expect(d <= m, spec + " r=" + str(r) + ": dim_w " + str(d) + " > m_e " + str(m));
      }
      if (auto s = structural_construction(g, r, cfg))
        c.expect(static_cast<std::int64_t>(s->size()) >= m && percolates(g, *s, r),
                 spec + " r=" + str(r) + ": construction below the oracle or not percolating");
    }
  }
}

void witness_families(Check& c) {
  const std::vector<std::pair<std::string, Graph>> bases{
      {"K_1", make_k1()}, {"P_2", make_path(2)}, {"P_3", make_path(3)}, {"S_2", make_star(2)}};
  const std::vector<std::pair<std::string, Graph>> trees{
      {"P_2", make_path(2)}, {"P_3", make_path(3)}, {"S_2", make_star(2)}, {"S_3", make_star(3)}};
  auto check = [&](const WitnessFamily& f, const Graph& g, const EdgeColouring& col, std::int64_t formula,
                   const std::string& at) {
    const FamilyReport rep = verify_family(f, g, col);
    c.expect(rep.members_in_w, at + ": member outside W");
    c.equal(rep.rank, f.claimed_dimension, at + " rank");
    c.equal(static_cast<std::int64_t>(f.claimed_dimension), formula, at + " claimed vs formula");
    for (const auto& m : f.members)
      c.expect(w_membership(f.host, f.colouring, f.r, m.entries), at + ": " + m.provenance + " not in W");
  };
  for (const auto& [gname, g] : bases) {
    const EdgeColouring col = greedy_proper_colouring(g);
    const auto hg = degree_histogram(g);
    for (int r = 1; r <= 3; ++r) {
      const std::int64_t d0 = dim_or_zero(g, col, r);
      const std::int64_t d1 = dim_or_zero(g, col, r - 1);
      const std::int64_t d2 = dim_or_zero(g, col, r - 2);
      for (const auto& [tname, t] : trees) {
        const auto rooted = root_tree_at_leaf(t);
        const auto f = tree_witness_family(g, col, rooted, r);
        const auto lo = formula_tree_lower(d0, d1, hg, degree_histogram(t), static_cast<int>(t.vertex_count()), r);
        check(f, g, col, lo.value, "tree " + gname + " x " + tname + " r=" + str(r));
      }
      for (int k = 1; k <= 3; ++k) {
        const auto f = star_witness_family(g, col, k, r);
        check(f, g, col, formula_star_general(d0, d1, hg, k, r, nullptr).value,
              "star " + gname + " x S_" + str(k) + " r=" + str(r));
      }
      if (r >= 2) {
        const auto f = theta_witness_family(g, col, ThetaSpec(4, 4), r);
        check(f, g, col, formula_theta_general(d0, d1, d2, hg, 4, 4, r, nullptr).value,
              "theta " + gname + " x H_4,4 r=" + str(r));
      }
    }
  }
}

void bounds_match(Check& c) {
  std::vector<Graph> gs{make_k1()};
  for (const auto& spec : suite_specs()) gs.push_back(parse_spec(spec));
  std::vector<Graph> ts;
  for (int n = 2; n <= 6; ++n)
    for (auto& t : trees_on(n)) ts.push_back(std::move(t));
  std::set<std::pair<std::map<int, std::int64_t>, std::map<int, std::int64_t>>> done;
  auto as_map = [](const DegreeHistogram& h) {
    std::map<int, std::int64_t> m;
    for (int d = 0; d <= h.max_degree(); ++d)
      if (h.count(d)) m[d] = h.count(d);
    return m;
  };
  for (const auto& g : gs)
    for (const auto& t : ts) {
      const auto hg = degree_histogram(g);
      const auto ht = degree_histogram(t);
      if (!done.insert({as_map(hg), as_map(ht)}).second) continue;
      for (int r = 1; r <= 5; ++r) {
        const bool want = hg.min_degree() >= r - 2 || is_path_graph(t);
        c.expect(bounds_match_predicate(hg, ht, r) == want,
                 g.id() + " with tree of max degree " + str(ht.max_degree()) + ", r=" + str(r));
      }
    }
  c.expect(done.size() > 20, "too few histogram pairs");
}

void percolation_properties(Check& c) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    const unsigned density = 2 + rng() % 5;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 8 < density) edges.emplace_back(u, v);
    std::vector<VertexLabel> labels;
    for (int v = 0; v < n; ++v) labels.push_back(VertexLabel::of(v));
    const Graph g(std::move(labels), std::move(edges));
    const int r = static_cast<int>(rng() % 5);
    EdgeSet s(g.edge_count());
    EdgeSet bigger(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const unsigned roll = rng() % 6;
      if (roll == 0) s.insert(e);
      if (roll <= 2) bigger.insert(e);
    }
    const std::string at = "trial " + str(trial);
    const EdgeSet cs = closure(g, s, r).final;
    c.expect(s.is_subset_of(cs), at + ": closure not extensive");
    c.expect(cs.is_subset_of(closure(g, bigger, r).final), at + ": not monotone in the seed");
    c.expect(closure(g, cs, r).final == cs, at + ": not idempotent");
    c.expect(closure(g, s, r + 1).final.is_subset_of(cs), at + ": not monotone in r");
  }
}

void recursion_vs_materialisation(Check& c) {
  const CertifierConfig cfg = config();
  const Graph s2 = make_star(2);
  const Graph s2s2 = parse_spec("prod(star(2),star(2))");
  for (int r = 2; r <= 4; ++r) {
    const auto chain = formula_star_product({2, 2}, r).value;
    const auto general = formula_star_general(bf(s2, r), bf(s2, r - 1), degree_histogram(s2), 2, r, nullptr).value;
    c.equal(chain, general, "stars [2,2] r=" + str(r));
    c.equal(bf(s2s2, r), chain, "stars [2,2] brute force r=" + str(r));
  }
  const Graph k1 = make_k1();
  const Graph h = make_theta(4, 4);
  auto me = [&](const Graph& g, int r) -> std::int64_t {
    if (r <= 0) return 0;
    const auto cv = certify_me(g, r, cfg);
    c.expect(cv.value.has_value(), g.id() + " r=" + str(r) + " not certified");
    return cv.value.value_or(-1);
  };
  for (int r = 2; r <= 4; ++r) {
    c.equal(formula_theta_product({{4, 4}}, r).value,
            formula_theta_general(me(k1, r), me(k1, r - 1), me(k1, r - 2), degree_histogram(k1), 4, 4, r, nullptr).value,
            "theta [(4,4)] r=" + str(r));
    c.equal(formula_theta_product({{4, 4}, {4, 4}}, r).value,
            formula_theta_general(me(h, r), me(h, r - 1), me(h, r - 2), degree_histogram(h), 4, 4, r, nullptr).value,
            "theta [(4,4),(4,4)] r=" + str(r));
  }
  const Graph square = parse_spec("prod(theta(4,4),theta(4,4))");
  c.equal(square.vertex_count(), 36u, "theta square order");
  c.equal(greedy_dim(square, 2), formula_theta_product({{4, 4}, {4, 4}}, 2).value, "dim_w on the theta square r=2");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "star baseline", 1.0, star_baseline},
      {2, "path baseline", 5.0, path_baseline},
      {3, "grids P_2 x P_n at r=2", 30.0, grids},
      {4, "S_2 x S_2 at r=2", 300.0, stars_product},
      {5, "theta graphs at r=2,3", 60.0, theta},
      {6, "dim_w <= m_e on the suite", 600.0, hhq_consistency},
      {7, "witness families", 120.0, witness_families},
      {8, "bounds-match predicate", 60.0, bounds_match},
      {9, "percolation properties", 60.0, percolation_properties},
      {10, "recursion vs materialisation", 300.0, recursion_vs_materialisation},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check check;
    std::string crash;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      crash = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= cr.budget_s;
    const bool pass = check.ok() && crash.empty() && in_time;
    if (!pass) ++failures;
    std::printf("%s %d %s: %zu checks, %.3f s (budget %.0f s)", pass ? "PASS" : "FAIL", cr.id, cr.name.c_str(),
                check.count(), secs, cr.budget_s);
    if (!crash.empty()) std::printf(" | exception: %s", crash.c_str());
    if (!check.ok()) std::printf(" | %s", check.notes().c_str());
    if (!in_time) std::printf(" | over budget");
    std::printf("\n");
  }
  return failures == 0 ? 0 : 1;
}
