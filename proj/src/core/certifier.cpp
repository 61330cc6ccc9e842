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

#include "percert/certifier.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "percert/constructions.hpp"
#include "percert/error.hpp"
#include "percert/witness.hpp"

namespace percert {

namespace {

constexpr const char* kModule = "certifier";

[[noreturn]] void fail(ErrorCode code, const std::string& what) { throw Error(code, kModule, what); }

// --- 64-bit mask kernel for exhaustive search --------------------------------

struct MaskGraph {
  std::vector<std::uint64_t> incident;  // per vertex
  std::vector<std::size_t> eu, ev;
  std::uint64_t all = 0;

  explicit MaskGraph(const Graph& g) : incident(g.vertex_count(), 0) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const std::uint64_t bit = std::uint64_t{1} << e;
      incident[g.edge(e).u] |= bit;
      incident[g.edge(e).v] |= bit;
      eu.push_back(g.edge(e).u);
      ev.push_back(g.edge(e).v);
      all |= bit;
    }
  }

  bool percolates(std::uint64_t infected, int r) const {
    for (;;) {
      std::uint64_t fresh = 0;
      for (std::uint64_t healthy = all & ~infected; healthy != 0; healthy &= healthy - 1) {
        const int e = std::countr_zero(healthy);
        if (std::popcount(infected & incident[eu[e]]) >= r ||
            std::popcount(infected & incident[ev[e]]) >= r)
          fresh |= std::uint64_t{1} << e;
      }
      if (fresh == 0) return infected == all;
      infected |= fresh;
    }
  }
};

// --- product structure -----------------------------------------------------

struct Step {
  enum Kind { identity, tree, star, theta } kind = identity;
  std::shared_ptr<const Graph> factor;
  std::optional<RootedTree> rooted;
  int k = 0;
  std::optional<ThetaSpec> spec;
};

std::optional<Step> classify(const std::shared_ptr<const Graph>& f) {
  Step s;
  s.factor = f;
  const auto& prov = f->provenance();
  if (f->vertex_count() == 1) return s;
  if (prov.kind == FamilyKind::star && !prov.params.empty()) {
    s.kind = Step::star;
    s.k = prov.params[0];
    return s;
  }
  if (prov.kind == FamilyKind::theta && prov.theta) {
    if (prov.theta->l() < 4) return std::nullopt;
    s.kind = Step::theta;
    s.spec = prov.theta;
    return s;
  }
  if (is_tree(*f)) {
    s.kind = Step::tree;
    s.rooted = root_tree_at_leaf(*f);
    return s;
  }
  return std::nullopt;
}

std::vector<std::shared_ptr<const Graph>> factors_of(const Graph& g) {
  if (g.provenance().kind == FamilyKind::product && !g.provenance().factors.empty())
    return g.provenance().factors;
  return {std::make_shared<const Graph>(g)};
}

std::optional<std::vector<Step>> decompose(const Graph& g) {
  std::vector<Step> out;
  for (const auto& f : factors_of(g)) {
    auto s = classify(f);
    if (!s) return std::nullopt;
    out.push_back(std::move(*s));
  }
  return out;
}

Graph prefix_graph(const std::vector<Step>& steps, std::size_t p) {
  std::vector<std::shared_ptr<const Graph>> fs;
  for (std::size_t i = 0; i < p; ++i) fs.push_back(steps[i].factor);
  return product_of(fs);
}

// Host vertex of cartesian_product(G', H') -> same-position vertex of G' x F.
std::vector<std::size_t> host_map(const Step& s, std::size_t gv) {
  const std::size_t n = s.factor->vertex_count();
  std::vector<std::size_t> map(gv * n);
  for (std::size_t v = 0; v < gv; ++v)
    for (std::size_t i = 0; i < n; ++i)
      map[v * n + i] = v * n + (s.kind == Step::tree ? s.rooted->original[i] : i);
  return map;
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

// --- memo ------------------------------------------------------------------

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::string, int>, EdgeSet>& memo() {
  static std::map<std::pair<std::string, int>, EdgeSet> m;
  return m;
}

}  // namespace

CertifierConfig CertifierConfig::from_env() {
  CertifierConfig cfg;
  if (const char* env = std::getenv("PERCERT_BRUTEFORCE_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0 || static_cast<std::size_t>(v) > kMaxBruteforceCap)
      fail(ErrorCode::parameter, "PERCERT_BRUTEFORCE_CAP must be an integer in [0, 64]");
    cfg.bruteforce_cap = static_cast<std::size_t>(v);
  }
  return cfg;
}

const char* cert_status_name(CertStatus s) {
  switch (s) {
    case CertStatus::certified_exact: return "certified-exact";
    case CertStatus::brute_forced: return "brute-forced";
    case CertStatus::bounded: return "bounded";
  }
  return "?";
}

BruteForceResult brute_force_me(const Graph& g, int r, std::int64_t floor, std::size_t cap) {
  const std::size_t m = g.edge_count();
  if (cap > kMaxBruteforceCap) cap = kMaxBruteforceCap;
  if (m > cap)
    fail(ErrorCode::cap_exceeded, "brute force refused: " + std::to_string(m) +
                                      " edges exceeds the cap of " + std::to_string(cap));
  if (floor > static_cast<std::int64_t>(m)) fail(ErrorCode::parameter, "floor exceeds |E|");
  if (r <= 0 || m == 0) return {0, EdgeSet(m)};
  const MaskGraph mg(g);
  for (std::size_t s = static_cast<std::size_t>(std::max<std::int64_t>(floor, 0)); s <= m; ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      std::uint64_t mask = 0;
      for (auto i : idx) mask |= std::uint64_t{1} << i;
      if (mg.percolates(mask, r)) {
        EdgeSet w(m);
        for (auto i : idx) w.insert(i);
        return {static_cast<std::int64_t>(s), w};
      }
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == m - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  fail(ErrorCode::internal, "the full edge set failed to percolate");
}

EdgeSet forced_edges(const Graph& g, int r) {
  EdgeSet out(g.edge_count());
  if (r <= 0) return out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto u = static_cast<int>(g.degree(g.edge(e).u));
    const auto v = static_cast<int>(g.degree(g.edge(e).v));
    if (u - 1 < r && v - 1 < r) out.insert(e);
  }
  return out;
}

EdgeSet greedy_descent(const Graph& g, int r, EdgeSet start) {
  if (!percolates(g, start, r)) fail(ErrorCode::precondition, "greedy descent needs a percolating start");
  for (auto e : start.members()) {
    start.erase(e);
    if (!percolates(g, start, r)) start.insert(e);
  }
  return start;
}

std::optional<EdgeColouring> structural_colouring(const Graph& g) {
  const auto steps = decompose(g);
  if (!steps) return std::nullopt;
  Graph cur = make_k1();
  EdgeColouring c;
  for (const auto& s : *steps) {
    Graph target = cartesian_product(cur, *s.factor);
    switch (s.kind) {
      case Step::identity:
        c = remap_colouring(cur, c, target, identity_map(cur.vertex_count()));
        break;
      case Step::tree: {
        auto pc = product_colouring_tree(cur, c, *s.rooted);
        c = remap_colouring(pc.host, pc.colouring, target, host_map(s, cur.vertex_count()));
        break;
      }
      case Step::star: {
        auto pc = product_colouring_star(cur, c, s.k);
        c = pc.colouring;
        break;
      }
      case Step::theta: {
        auto pc = product_colouring_theta(cur, c, *s.spec);
        c = pc.colouring;
        break;
      }
    }
    cur = std::move(target);
  }
  return remap_colouring(cur, c, g, identity_map(g.vertex_count()));
}

std::vector<std::pair<std::string, EdgeColouring>> candidate_colourings(const Graph& g,
                                                                        const CertifierConfig& cfg) {
  std::vector<std::pair<std::string, EdgeColouring>> out;
  out.emplace_back("greedy", greedy_proper_colouring(g));
  if (auto s = structural_colouring(g)) out.emplace_back("structural", std::move(*s));
  for (const auto& extra : cfg.extra_colourings) out.push_back(extra);
  return out;
}

const char* split_kind_name(LastFactorSplit::Kind k) {
  switch (k) {
    case LastFactorSplit::tree: return "tree";
    case LastFactorSplit::star: return "star";
    case LastFactorSplit::theta: return "theta";
  }
  return "?";
}

std::optional<LastFactorSplit> split_last_factor(const Graph& g) {
  const auto steps = decompose(g);
  if (!steps) return std::nullopt;
  std::size_t p = steps->size();
  for (std::size_t i = 0; i < steps->size(); ++i)
    if ((*steps)[i].kind != Step::identity) p = i;
  if (p == steps->size()) return std::nullopt;
  const Step& s = (*steps)[p];
  LastFactorSplit out;
  out.kind = s.kind == Step::tree ? LastFactorSplit::tree
             : s.kind == Step::star ? LastFactorSplit::star
                                    : LastFactorSplit::theta;
  out.prefix = prefix_graph(*steps, p);
  out.factor = s.factor;
  out.rooted = s.rooted;
  out.k = s.k;
  out.spec = s.spec;
  // identity factors after p leave indices unchanged
  out.host_map = host_map(s, out.prefix.vertex_count());
  return out;
}

ProductConstruction construct_product(const Graph& g, int r, const CertifierConfig& cfg) {
  auto split = split_last_factor(g);
  if (!split)
    fail(ErrorCode::precondition,
         "graph is not a DSL product ending in a path, tree, star or theta factor: " + g.id());
  const Graph& prefix = split->prefix;
  const OptimalSetSupplier opt = [&](int rr) {
    return rr <= 0 ? EdgeSet(prefix.edge_count()) : optimal_set_supplier(prefix, rr, cfg);
  };
  std::optional<ConstructionPlan> plan;
  switch (split->kind) {
    case LastFactorSplit::tree: plan = construct_tree_product(prefix, *split->rooted, r, opt); break;
    case LastFactorSplit::star: plan = construct_star_product(prefix, split->k, r, opt); break;
    case LastFactorSplit::theta: plan = construct_theta_product(prefix, *split->spec, r, opt); break;
  }
  EdgeSet out(g.edge_count());
  for (auto e : plan->total.members()) {
    const Edge& ed = plan->host.edge(e);
    auto ge = g.edge_index(split->host_map[ed.u], split->host_map[ed.v]);
    if (!ge) fail(ErrorCode::internal, "construction edge has no image in the product");
    out.insert(*ge);
  }
  return {std::move(*split), std::move(*plan), std::move(out)};
}

std::optional<EdgeSet> structural_construction(const Graph& g, int r, const CertifierConfig& cfg) {
  if (r <= 0) return EdgeSet(g.edge_count());
  const auto split = split_last_factor(g);
  if (!split) {
    // all factors trivial: G is K_1
    if (decompose(g)) return EdgeSet(g.edge_count());
    return std::nullopt;
  }
  if (split->kind == LastFactorSplit::theta && r < 2) return std::nullopt;
  try {
    return construct_product(g, r, cfg).witness;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::precondition && e.code() != ErrorCode::cap_exceeded) throw;
    return std::nullopt;
  }
}

CertifiedValue certify_me(const Graph& g, int r, const CertifierConfig& cfg) {
  CertifiedValue cv;
  cv.graph_id = g.id();
  cv.r = r;
  const std::size_t m = g.edge_count();
  if (r <= 0 || m == 0) {
    cv.lower_source = cv.upper_source = "trivial";
    cv.witness = EdgeSet(m);
    cv.status = CertStatus::certified_exact;
    cv.value = 0;
    return cv;
  }

  cv.lower = -1;
  for (const auto& [name, c] : candidate_colourings(g, cfg)) {
    const std::int64_t d = dim_w(g, c, r);
    if (d > cv.lower) {
      cv.lower = d;
      cv.lower_source = name;
    }
  }
  const auto forced = static_cast<std::int64_t>(forced_edges(g, r).size());
  if (forced > cv.lower) {
    cv.lower = forced;
    cv.lower_source = "forcing";
  }

  cv.witness = EdgeSet::all(m);
  cv.upper = static_cast<std::int64_t>(m);
  cv.upper_source = "trivial";
  if (r == 1) {
    // one edge per component with edges
    EdgeSet w(m);
    std::vector<char> seen(m, 0);
    for (std::size_t e = 0; e < m; ++e) {
      if (seen[e]) continue;
      EdgeSet seed(m);
      seed.insert(e);
      for (auto f : closure(g, seed, 1).final.members()) seen[f] = 1;
      w.insert(e);
    }
    cv.witness = w;
    cv.upper = static_cast<std::int64_t>(w.size());
    cv.upper_source = "components";
  } else if (auto s = structural_construction(g, r, cfg)) {
    if (static_cast<std::int64_t>(s->size()) <= cv.upper) {
      cv.witness = *s;
      cv.upper = static_cast<std::int64_t>(s->size());
      cv.upper_source = "construction";
    }
  }
  if (cv.upper > cv.lower) {
    EdgeSet d = greedy_descent(g, r, cv.witness);
    if (static_cast<std::int64_t>(d.size()) < cv.upper) {
      cv.witness = d;
      cv.upper = static_cast<std::int64_t>(d.size());
      cv.upper_source = "greedy";
    }
  }
  if (cv.lower > cv.upper)
    fail(ErrorCode::internal, "lower bound " + std::to_string(cv.lower) + " exceeds upper bound " +
                                  std::to_string(cv.upper) + " on " + cv.graph_id);

  if (cv.lower == cv.upper) {
    cv.status = CertStatus::certified_exact;
    cv.value = cv.upper;
  } else if (m <= std::min(cfg.bruteforce_cap, kMaxBruteforceCap)) {
    auto bf = brute_force_me(g, r, cv.lower, cfg.bruteforce_cap);
    cv.upper = bf.value;
    cv.witness = bf.witness;
    cv.upper_source = "brute-force";
    cv.status = CertStatus::brute_forced;
    cv.value = bf.value;
  }
  return cv;
}

EdgeSet optimal_set_supplier(const Graph& g, int r, const CertifierConfig& cfg) {
  if (r <= 0 || g.edge_count() == 0) return EdgeSet(g.edge_count());
  const auto key = std::make_pair(g.id(), r);
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto it = memo().find(key);
    if (it != memo().end() && it->second.universe() == g.edge_count()) return it->second;
  }
  const CertifiedValue cv = certify_me(g, r, cfg);
  if (cv.status == CertStatus::bounded)
    fail(ErrorCode::precondition, "no optimal set for " + cv.graph_id + " at r=" + std::to_string(r) +
                                      ": only bounds " + std::to_string(cv.lower) + " <= m_e <= " +
                                      std::to_string(cv.upper));
  std::lock_guard<std::mutex> lock(memo_mutex());
  return memo().emplace(key, cv.witness).first->second;
}

std::optional<HypothesisToken> TokenIssuer::issue(const Graph& g, const std::vector<int>& thresholds,
                                                  const CertifierConfig& cfg) {
  std::map<int, std::int64_t> me;
  std::set<int> positive;
  for (int i : thresholds) {
    if (i <= 0) continue;
    const CertifiedValue cv = certify_me(g, i, cfg);
    if (!cv.value) return std::nullopt;
    me[i] = *cv.value;
    positive.insert(i);
  }
  for (const auto& [name, c] : candidate_colourings(g, cfg)) {
    const bool all_equal = std::all_of(positive.begin(), positive.end(),
                                       [&](int i) { return dim_w(g, c, i) == me[i]; });
    if (all_equal) return HypothesisToken(g.id(), degree_histogram(g), positive, name);
  }
  return std::nullopt;
}

TreeProductReport tree_product_formulas(const Graph& g, const Graph& t, int r,
                                        const CertifierConfig& cfg) {
  if (!is_tree(t)) fail(ErrorCode::parameter, "second factor must be a tree");
  const int n = static_cast<int>(t.vertex_count());
  const DegreeHistogram hg = degree_histogram(g);
  const DegreeHistogram ht = degree_histogram(t);
  const CertifiedValue at_r = certify_me(g, r, cfg);
  const CertifiedValue at_r1 = certify_me(g, r - 1, cfg);

  TreeProductReport rep;
  rep.upper = formula_tree_upper(at_r.upper, at_r1.upper, hg, ht, n, r);
  rep.lower = formula_tree_lower(0, 0, hg, ht, n, r);
  for (const auto& [name, c] : candidate_colourings(g, cfg)) {
    FormulaResult lo = formula_tree_lower(dim_w(g, c, r), dim_w(g, c, r - 1 < 0 ? 0 : r - 1), hg, ht, n, r);
    if (lo.value >= rep.lower.value) {
      rep.lower = lo;
      rep.lower.hypothesis = "dim W under the " + name + " colouring of G";
    }
  }
  const auto token = TokenIssuer::issue(g, {r - 1, r}, cfg);
  rep.exact = formula_tree_exact(at_r.value.value_or(at_r.upper), at_r1.value.value_or(at_r1.upper), hg,
                                 ht, n, r, token ? &*token : nullptr);
  rep.bounds_match = bounds_match_predicate(hg, ht, r);
  return rep;
}

}  // namespace percert
