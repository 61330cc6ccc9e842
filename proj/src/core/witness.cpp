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

#include "percert/witness.hpp"

#include <algorithm>
#include <utility>

#include "percert/error.hpp"

namespace percert {

namespace {

constexpr const char* kModule = "witness-space";

[[noreturn]] void fail(ErrorCode code, const std::string& what) { throw Error(code, kModule, what); }

void require_proper(const Graph& g, const EdgeColouring& c) {
  if (c.size() != g.edge_count()) fail(ErrorCode::parameter, "colouring does not match the graph");
  if (!is_proper(g, c)) fail(ErrorCode::precondition, "edge colouring is not proper");
}

std::vector<Rational> incident_colours(const Graph& g, const EdgeColouring& c, std::size_t v) {
  std::vector<Rational> out;
  for (auto e : g.incident_edges(v)) out.push_back(c[e]);
  return out;
}

// prod over G-neighbours u of v of (x - c_uv)
Polynomial neighbour_product(const Graph& g, const EdgeColouring& c, std::size_t v) {
  const auto roots = incident_colours(g, c, v);
  return Polynomial::from_roots(roots);
}

// Vanishes at every colour at host vertex x except the one on edge xy, and
// equals 1 at `target`.
Polynomial normalised_except(const Graph& host, const EdgeColouring& c, std::size_t x,
                             std::size_t y, const Rational& target) {
  const auto skip = host.edge_index(x, y);
  std::vector<Rational> roots;
  for (auto e : host.incident_edges(x))
    if (!skip || e != *skip) roots.push_back(c[e]);
  Polynomial p = Polynomial::from_roots(roots);
  const Rational at = p.evaluate(target);
  if (at == 0) fail(ErrorCode::internal, "normalising polynomial vanishes at its target");
  return p * Rational(1 / at);
}

// beta * shape with value `want` at `at`.
Polynomial matched(const Polynomial& shape, const Rational& at, const Rational& want) {
  const Rational v = shape.evaluate(at);
  if (v == 0) fail(ErrorCode::internal, "matching polynomial vanishes at its target");
  return shape * Rational(want / v);
}

std::string vlabel(const Graph& g, std::size_t v) { return g.label(v).to_string(); }

void check_or_throw(const WitnessFamily& f, const Graph& g, const EdgeColouring& c) {
  const FamilyReport rep = verify_family(f, g, c);
  if (rep.ok(f.claimed_dimension)) return;
  std::string why = rep.failures.empty() ? "rank " + std::to_string(rep.rank) + " below " +
                                               std::to_string(f.claimed_dimension)
                                         : rep.failures.front();
  fail(ErrorCode::internal, "witness family failed verification: " + why);
}

}  // namespace

WLayout w_layout(const Graph& g, int r) {
  WLayout out;
  out.offset.resize(g.vertex_count());
  out.cap.resize(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out.offset[v] = out.unknowns;
    out.cap[v] = std::max(0, std::min(r, static_cast<int>(g.degree(v))));
    out.unknowns += static_cast<std::size_t>(out.cap[v]);
  }
  return out;
}

std::vector<Rational> flatten(const WLayout& layout, const PolyVector& p) {
  if (p.size() != layout.cap.size()) fail(ErrorCode::parameter, "vector length does not match the graph");
  std::vector<Rational> out(layout.unknowns);
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (p[v].degree() >= layout.cap[v]) fail(ErrorCode::parameter, "entry degree exceeds its cap");
    for (int j = 0; j <= p[v].degree(); ++j) out[layout.offset[v] + j] = p[v].coefficient(j);
  }
  return out;
}

PolyVector unflatten(const WLayout& layout, const std::vector<Rational>& coefficients) {
  PolyVector out(layout.cap.size());
  for (std::size_t v = 0; v < out.size(); ++v) {
    std::vector<Rational> co(coefficients.begin() + static_cast<long>(layout.offset[v]),
                             coefficients.begin() + static_cast<long>(layout.offset[v] + layout.cap[v]));
    out[v] = Polynomial(std::move(co));
  }
  return out;
}

bool w_membership(const Graph& g, const EdgeColouring& c, int r, const PolyVector& p) {
  if (p.size() != g.vertex_count() || c.size() != g.edge_count()) return false;
  const WLayout layout = w_layout(g, r);
  for (std::size_t v = 0; v < p.size(); ++v)
    if (p[v].degree() >= layout.cap[v]) return false;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (p[ed.u].evaluate(c[e]) != p[ed.v].evaluate(c[e])) return false;
  }
  return true;
}

RationalMatrix w_constraint_matrix(const Graph& g, const EdgeColouring& c, int r) {
  const WLayout layout = w_layout(g, r);
  RationalMatrix m(g.edge_count(), layout.unknowns);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    Rational power = 1;
    const int top = std::max(layout.cap[ed.u], layout.cap[ed.v]);
    for (int j = 0; j < top; ++j) {
      if (j < layout.cap[ed.u]) m(e, layout.offset[ed.u] + j) += power;
      if (j < layout.cap[ed.v]) m(e, layout.offset[ed.v] + j) -= power;
      power *= c[e];
    }
  }
  return m;
}

std::int64_t dim_w(const Graph& g, const EdgeColouring& c, int r) {
  if (r < 0) fail(ErrorCode::parameter, "r must be non-negative");
  require_proper(g, c);
  const WLayout layout = w_layout(g, r);
  if (layout.unknowns == 0) return 0;
  const RationalMatrix m = w_constraint_matrix(g, c, r);
  return static_cast<std::int64_t>(layout.unknowns - m.rank());
}

std::map<std::string, std::size_t> WitnessFamily::group_counts() const {
  std::map<std::string, std::size_t> out;
  for (const auto& m : members) ++out[m.group()];
  return out;
}

WitnessFamily basis_of_w(const Graph& g, const EdgeColouring& c, int r) {
  if (r < 0) fail(ErrorCode::parameter, "r must be non-negative");
  require_proper(g, c);
  WitnessFamily out{g, c, r, 1, {}, 0};
  const WLayout layout = w_layout(g, r);
  if (layout.unknowns > 0) {
    const auto null = w_constraint_matrix(g, c, r).nullspace();
    for (std::size_t j = 0; j < null.size(); ++j)
      out.members.push_back({unflatten(layout, null[j]), "B:" + std::to_string(j), std::nullopt});
  }
  out.claimed_dimension = out.members.size();
  return out;
}

std::vector<Rational> z_evaluate(const Graph& g, const EdgeColouring& c, const PolyVector& p,
                                 std::size_t factor_order, const ZVector& z) {
  if (factor_order == 0 || p.size() != g.vertex_count() * factor_order)
    fail(ErrorCode::parameter, "vector length is not |V(G)| * factor order");
  if (z.size() != g.vertex_count()) fail(ErrorCode::parameter, "z has the wrong length");
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    const auto colours = incident_colours(g, c, u);
    if (std::find(colours.begin(), colours.end(), z[u]) == colours.end())
      fail(ErrorCode::precondition, "z_" + vlabel(g, u) + " is not a colour at " + vlabel(g, u));
  }
  std::vector<Rational> out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[x] = p[x].evaluate(z[x / factor_order]);
  return out;
}

ZVector zeros_lemma_witness(const Graph& g, const EdgeColouring& c, const PolyVector& p,
                            std::size_t factor_order, std::size_t base) {
  if (factor_order == 0 || p.size() != g.vertex_count() * factor_order)
    fail(ErrorCode::parameter, "vector length is not |V(G)| * factor order");
  if (base >= p.size()) fail(ErrorCode::parameter, "base vertex out of range");
  ZVector z(g.vertex_count());
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) == 0) fail(ErrorCode::precondition, "Z_c is empty: " + vlabel(g, u) + " is isolated");
    z[u] = c[g.incident_edges(u).front()];
  }
  const std::size_t u = base / factor_order;
  for (const auto& colour : incident_colours(g, c, u)) {
    if (p[base].evaluate(colour) != 0) {
      z[u] = colour;
      return z;
    }
  }
  fail(ErrorCode::precondition, "entry vanishes at every colour at " + vlabel(g, u));
}

FamilyReport verify_family(const WitnessFamily& family, const Graph& g, const EdgeColouring& c) {
  FamilyReport rep;
  const Graph& host = family.host;
  const WLayout layout = w_layout(host, family.r);
  RationalMatrix stack(0, layout.unknowns);
  for (const auto& m : family.members) {
    if (!w_membership(host, family.colouring, family.r, m.entries)) {
      rep.members_in_w = false;
      rep.failures.push_back(m.provenance + " is not in W");
      continue;
    }
    stack.append_row(flatten(layout, m.entries));
    if (!m.base_vertex) continue;
    const std::size_t v = *m.base_vertex;
    const auto colours = incident_colours(g, c, v);
    for (std::size_t x = 0; x < m.entries.size(); ++x) {
      const bool at_v = x / family.factor_order == v;
      bool ok = at_v ? std::all_of(colours.begin(), colours.end(),
                                   [&](const Rational& a) { return m.entries[x].evaluate(a) == 0; })
                     : m.entries[x].is_zero();
      if (!ok) {
        rep.x_members_vanish = false;
        rep.failures.push_back(m.provenance + " does not vanish on Z_c");
        break;
      }
    }
  }
  rep.rank = stack.rows() == 0 ? 0 : stack.rank();
  return rep;
}

WitnessFamily tree_witness_family(const Graph& g, const EdgeColouring& c, const RootedTree& tree,
                                  int r) {
  if (r < 1) fail(ErrorCode::parameter, "tree witness family requires r >= 1");
  require_proper(g, c);
  const ProductColouring pc = product_colouring_tree(g, c, tree);
  const std::size_t n = tree.order();
  const std::size_t nv = g.vertex_count();
  WitnessFamily out{pc.host, pc.colouring, r, n, {}, 0};
  auto blank = [&] { return PolyVector(nv * n); };

  for (const auto& b : basis_of_w(g, c, r).members) {
    PolyVector p = blank();
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t i = 0; i < n; ++i) p[v * n + i] = b.entries[v];
    out.members.push_back({std::move(p), "A_0", std::nullopt});
  }
  const auto lower = basis_of_w(g, c, r - 1).members;
  for (std::size_t l = 1; l < n; ++l) {
    const Polynomial lin = Polynomial::linear_root(pc.alpha[l]);
    const auto sub = tree.subtree(l);
    for (const auto& b : lower) {
      PolyVector p = blank();
      for (std::size_t v = 0; v < nv; ++v)
        for (auto i : sub) p[v * n + i] = lin * b.entries[v];
      out.members.push_back({std::move(p), "A_l:" + std::to_string(l), std::nullopt});
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    const int d = static_cast<int>(g.degree(v));
    const Polynomial pi = neighbour_product(g, c, v);
    if (d <= r - 1) {
      PolyVector p = blank();
      for (std::size_t i = 0; i < n; ++i) p[v * n + i] = pi;
      out.members.push_back({std::move(p), "X_0:v=" + vlabel(g, v), v});
    }
    if (d > r - 2) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (tree.tree.degree(i) < 2) continue;
      PolyVector p = blank();
      p[v * n + i] = Polynomial::linear_root(pc.alpha[i]) * pi;
      for (auto j : tree.children[i]) {
        const Rational scale = pc.alpha[j] - pc.alpha[i];
        for (auto x : tree.subtree(j)) p[v * n + x] = pi * scale;
      }
      out.members.push_back(
          {std::move(p), "X_i:v=" + vlabel(g, v) + ",i=" + std::to_string(i), v});
    }
  }
  out.claimed_dimension = out.members.size();
  check_or_throw(out, g, c);
  return out;
}

WitnessFamily star_witness_family(const Graph& g, const EdgeColouring& c, int k, int r) {
  if (k < 1) fail(ErrorCode::parameter, "star witness family requires k >= 1");
  if (r < 1) fail(ErrorCode::parameter, "star witness family requires r >= 1");
  require_proper(g, c);
  const ProductColouring pc = product_colouring_star(g, c, k);
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  const std::size_t nv = g.vertex_count();
  WitnessFamily out{pc.host, pc.colouring, r, n, {}, 0};
  auto blank = [&] { return PolyVector(nv * n); };
  const auto& alpha = pc.alpha;

  for (const auto& b : basis_of_w(g, c, r).members) {
    PolyVector p = blank();
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t i = 0; i < n; ++i) p[v * n + i] = b.entries[v];
    out.members.push_back({std::move(p), "A_0", std::nullopt});
  }
  const auto lower = basis_of_w(g, c, r - 1).members;
  for (std::size_t l = 1; l < n; ++l) {
    for (const auto& b : lower) {
      PolyVector p = blank();
      for (std::size_t v = 0; v < nv; ++v)
        p[v * n + l] = b.entries[v] * Polynomial::linear_root(alpha[l]);
      out.members.push_back({std::move(p), "A_l:" + std::to_string(l), std::nullopt});
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    const int d = static_cast<int>(g.degree(v));
    const Polynomial pi = neighbour_product(g, c, v);
    const std::string vl = vlabel(g, v);
    if (d <= r - k) {
      for (std::size_t l = 1; l < n; ++l) {
        PolyVector p = blank();
        p[v * n] = normalised_except(pc.host, pc.colouring, v * n, v * n + l, alpha[l]);
        p[v * n + l] = normalised_except(pc.host, pc.colouring, v * n + l, v * n, alpha[l]);
        out.members.push_back({std::move(p), "X_0:v=" + vl + ",l=" + std::to_string(l), v});
      }
    }
    const int t = r - d;
    if (t < 1 || t > k - 1) continue;
    for (int l = 1; l <= t; ++l) {
      PolyVector p = blank();
      Polynomial centre = pi;
      for (int i = 1; i <= t; ++i)
        if (i != l) centre = centre * Polynomial::linear_root(alpha[static_cast<std::size_t>(i)]);
      auto leaf = [&](std::size_t j) { p[v * n + j] = matched(pi, alpha[j], centre.evaluate(alpha[j])); };
      leaf(static_cast<std::size_t>(l));
      for (int j = t + 1; j <= k; ++j) leaf(static_cast<std::size_t>(j));
      p[v * n] = centre;
      out.members.push_back(
          {std::move(p), "X_t:v=" + vl + ",t=" + std::to_string(t) + ",l=" + std::to_string(l), v});
    }
  }
  out.claimed_dimension = out.members.size();
  check_or_throw(out, g, c);
  return out;
}

WitnessFamily theta_witness_family(const Graph& g, const EdgeColouring& c, const ThetaSpec& spec,
                                   int r) {
  if (spec.l() < 4) fail(ErrorCode::parameter, "theta witness family requires k >= l >= 4");
  if (r < 2) fail(ErrorCode::parameter, "theta witness family requires r >= 2");
  require_proper(g, c);
  const ProductColouring pc = product_colouring_theta(g, c, spec);
  const std::size_t n = spec.vertex_count();
  const std::size_t nv = g.vertex_count();
  const int k = spec.k();
  const int l = spec.l();
  WitnessFamily out{pc.host, pc.colouring, r, n, {}, 0};
  auto blank = [&] { return PolyVector(nv * n); };
  auto a = [&](ThetaIndex x) -> const Rational& { return pc.alpha[spec.slot_of(x)]; };
  auto at = [&](std::size_t v, ThetaIndex x) { return v * n + spec.vertex_of(x); };
  auto lin = [](const Rational& root) { return Polynomial::linear_root(root); };
  auto name = [&](ThetaIndex x) { return spec.label_of(x).to_string(); };

  const ThetaIndex one{1, false}, two{2, false}, two_p{2, true}, three{3, false}, three_p{3, true};
  const ThetaIndex ell{l, false}, kp{k, true};
  const ThetaIndex ell_prev{l - 1, false}, kp_prev{k - 1, true};
  auto is_special = [&](ThetaIndex x) { return x == one || x == two || x == ell || x == kp; };

  // A-part
  for (const auto& b : basis_of_w(g, c, r).members) {
    PolyVector p = blank();
    for (std::size_t v = 0; v < nv; ++v)
      for (const auto& x : spec.order()) p[at(v, x)] = b.entries[v];
    out.members.push_back({std::move(p), "A_1", std::nullopt});
  }
  const auto lower = basis_of_w(g, c, r - 1).members;
  const auto lower2 = basis_of_w(g, c, r - 2).members;
  for (const auto& x : spec.order()) {
    if (x == one) continue;
    if (x == two) {
      const Rational d3 = (a(two) - a(three)) * (a(two_p) - a(one));
      const Rational d2 = (a(two) - a(one)) * (a(two_p) - a(one));
      const Rational d3p = (a(two) - a(one)) * (a(two_p) - a(three_p));
      for (const auto& b : lower) {
        PolyVector p = blank();
        for (std::size_t v = 0; v < nv; ++v) {
          p[at(v, three)] = lin(a(three)) * b.entries[v] * Rational(1 / d3);
          p[at(v, two)] = lin(a(one)) * b.entries[v] * Rational(1 / d2);
          p[at(v, three_p)] = lin(a(three_p)) * b.entries[v] * Rational(1 / d3p);
        }
        out.members.push_back({std::move(p), "A_2", std::nullopt});
      }
      continue;
    }
    if (x == ell || x == kp) {
      const Polynomial f = lin(a(spec.prev(x))) * lin(a(x));
      for (const auto& b : lower2) {
        PolyVector p = blank();
        for (std::size_t v = 0; v < nv; ++v) p[at(v, x)] = f * b.entries[v];
        out.members.push_back({std::move(p), x == ell ? "A_l" : "A_k'", std::nullopt});
      }
      continue;
    }
    const ThetaIndex pr = spec.prev(x), nx = spec.next(x);
    const Polynomial here = lin(a(pr)) * Rational(1 / (a(x) - a(pr)));
    const Polynomial there = lin(a(nx)) * Rational(1 / (a(x) - a(nx)));
    for (const auto& b : lower) {
      PolyVector p = blank();
      for (std::size_t v = 0; v < nv; ++v) {
        p[at(v, x)] = here * b.entries[v];
        p[at(v, nx)] = there * b.entries[v];
      }
      out.members.push_back({std::move(p), "A_i:i=" + name(x), std::nullopt});
    }
  }

  // X-part
  auto pair_vector = [&](std::size_t v, ThetaIndex x) {
    PolyVector p = blank();
    const std::size_t hx = at(v, x), hy = at(v, spec.next(x));
    p[hx] = normalised_except(pc.host, pc.colouring, hx, hy, a(x));
    p[hy] = normalised_except(pc.host, pc.colouring, hy, hx, a(x));
    return p;
  };
  for (std::size_t v = 0; v < nv; ++v) {
    const int d = static_cast<int>(g.degree(v));
    const Polynomial pi = neighbour_product(g, c, v);
    const std::string vl = vlabel(g, v);
    if (d == r - 1) {
      PolyVector p = blank();
      for (const auto& x : spec.order()) p[at(v, x)] = pi;
      out.members.push_back({std::move(p), "X_1:v=" + vl, v});
    } else if (d == r - 2) {
      for (const auto& x : spec.order()) {
        if (is_special(x)) continue;
        out.members.push_back({pair_vector(v, x), "X_2:v=" + vl + ",i=" + name(x), v});
      }
      {
        PolyVector p = blank();
        const Polynomial p2 = lin(a(one)) * pi;
        p[at(v, two)] = p2;
        p[at(v, three)] = matched(lin(a(three)) * pi, a(two), p2.evaluate(a(two)));
        p[at(v, three_p)] = matched(lin(a(three_p)) * pi, a(two_p), p2.evaluate(a(two_p)));
        out.members.push_back({std::move(p), "X_2:v=" + vl + ",i=2", v});
      }
      {
        PolyVector p = blank();
        const Polynomial p1 = lin(a(one)) * pi;
        p[at(v, one)] = p1;
        p[at(v, ell)] = matched(lin(a(ell_prev)) * pi, a(ell), p1.evaluate(a(ell)));
        p[at(v, kp)] = matched(lin(a(kp_prev)) * pi, a(kp), p1.evaluate(a(kp)));
        out.members.push_back({std::move(p), "X_2:v=" + vl + ",i=1", v});
      }
      {
        PolyVector p = blank();
        const Polynomial p1 = lin(a(ell)) * pi * Rational(1 / (a(one) - a(ell)));
        const Polynomial p2 = lin(a(two)) * pi * Rational(1 / (a(one) - a(two)));
        p[at(v, one)] = p1;
        p[at(v, two)] = p2;
        p[at(v, three_p)] = matched(lin(a(three_p)) * pi, a(two_p), p2.evaluate(a(two_p)));
        p[at(v, kp)] = matched(lin(a(kp_prev)) * pi, a(kp), p1.evaluate(a(kp)));
        out.members.push_back({std::move(p), "X_2:v=" + vl + ",i=0", v});
      }
    } else if (d <= r - 3) {
      for (int i = 1; i <= l; ++i)
        out.members.push_back(
            {pair_vector(v, {i, false}), "X_3:v=" + vl + ",i=" + std::to_string(i), v});
      for (int i = 2; i <= k; ++i)
        out.members.push_back(
            {pair_vector(v, {i, true}), "X_3:v=" + vl + ",i=" + std::to_string(i) + "'", v});
    }
  }
  out.claimed_dimension = out.members.size();
  check_or_throw(out, g, c);
  return out;
}

}  // namespace percert
