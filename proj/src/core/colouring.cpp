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

#include "percert/colouring.hpp"

#include <algorithm>
#include <numeric>

#include "percert/error.hpp"

namespace percert {

namespace {

constexpr const char* kModule = "colouring";

void require_proper(const Graph& g, const EdgeColouring& c) {
  if (!is_proper(g, c))
    throw Error(ErrorCode::precondition, kModule, "input colouring is not proper");
}

// Colour every copy of G inside the host with c; cross edges are left for the
// caller. Returns a vector with one slot per host edge.
std::vector<std::optional<Rational>> copy_colours(const Graph& host, const Graph& g,
                                                  const EdgeColouring& c, std::size_t nh) {
  std::vector<std::optional<Rational>> out(host.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& ge = g.edge(e);
    for (std::size_t h = 0; h < nh; ++h) {
      auto he = host.edge_index(ge.u * nh + h, ge.v * nh + h);
      out[*he] = c[e];
    }
  }
  return out;
}

EdgeColouring finish(std::vector<std::optional<Rational>> slots) {
  std::vector<Rational> out;
  out.reserve(slots.size());
  for (auto& s : slots) {
    if (!s) throw Error(ErrorCode::internal, kModule, "product colouring left an edge uncoloured");
    out.push_back(std::move(*s));
  }
  return EdgeColouring(std::move(out));
}

}  // namespace

std::set<Rational> EdgeColouring::palette() const {
  return std::set<Rational>(colours_.begin(), colours_.end());
}

Rational EdgeColouring::max_value() const {
  if (colours_.empty()) return Rational(0);
  return *std::max_element(colours_.begin(), colours_.end());
}

bool is_proper(const Graph& g, const EdgeColouring& c) {
  if (c.size() != g.edge_count()) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::set<Rational> seen;
    for (auto e : g.incident_edges(v))
      if (!seen.insert(c[e]).second) return false;
  }
  return true;
}

EdgeColouring greedy_proper_colouring(const Graph& g) {
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  return greedy_proper_colouring(g, order);
}

EdgeColouring greedy_proper_colouring(const Graph& g, std::span<const std::size_t> edge_order) {
  if (edge_order.size() != g.edge_count())
    throw Error(ErrorCode::parameter, kModule, "edge order must be a permutation of all edges");
  std::vector<long> colour(g.edge_count(), -1);
  for (auto e : edge_order) {
    if (e >= g.edge_count() || colour[e] != -1)
      throw Error(ErrorCode::parameter, kModule, "edge order must be a permutation of all edges");
    std::vector<char> used(2 * static_cast<std::size_t>(std::max(g.max_degree(), 1)), 0);
    for (auto end : {g.edge(e).u, g.edge(e).v}) {
      for (auto f : g.incident_edges(end))
        if (colour[f] >= 0 && static_cast<std::size_t>(colour[f]) < used.size()) used[colour[f]] = 1;
    }
    long pick = 0;
    while (used[static_cast<std::size_t>(pick)]) ++pick;
    colour[e] = pick;
  }
  std::vector<Rational> out;
  out.reserve(colour.size());
  for (auto x : colour) out.emplace_back(x);
  return EdgeColouring(std::move(out));
}

ProductColouring product_colouring_tree(const Graph& g, const EdgeColouring& c,
                                        const RootedTree& tree) {
  require_proper(g, c);
  const std::size_t n = tree.order();
  ProductColouring out;
  out.host = cartesian_product(g, tree.tree);
  out.factor_order = n;
  const Rational base = c.max_value();
  out.alpha.assign(n, Rational(0));
  for (std::size_t i = 1; i < n; ++i) out.alpha[i] = base + static_cast<long>(i);

  auto slots = copy_colours(out.host, g, c, n);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t i = 1; i < n; ++i) {
      auto he = out.host.edge_index(v * n + i, v * n + tree.parent[i]);
      slots[*he] = out.alpha[i];
    }
  }
  out.colouring = finish(std::move(slots));
  return out;
}

ProductColouring product_colouring_star(const Graph& g, const EdgeColouring& c, int k) {
  require_proper(g, c);
  Graph star = make_star(k);
  const std::size_t n = star.vertex_count();
  ProductColouring out;
  out.host = cartesian_product(g, star);
  out.factor_order = n;
  const Rational base = c.max_value();
  out.alpha.assign(n, Rational(0));
  for (std::size_t i = 1; i < n; ++i) out.alpha[i] = base + static_cast<long>(i);

  auto slots = copy_colours(out.host, g, c, n);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t i = 1; i < n; ++i) {
      auto he = out.host.edge_index(v * n, v * n + i);
      slots[*he] = out.alpha[i];
    }
  }
  out.colouring = finish(std::move(slots));
  return out;
}

ProductColouring product_colouring_theta(const Graph& g, const EdgeColouring& c,
                                         const ThetaSpec& spec) {
  if (spec.l() < 4)
    throw Error(ErrorCode::parameter, kModule, "theta product colouring requires k >= l >= 4");
  require_proper(g, c);
  Graph theta = make_theta(spec.k(), spec.l());
  const std::size_t n = theta.vertex_count();
  ProductColouring out;
  out.host = cartesian_product(g, theta);
  out.factor_order = n;
  const Rational base = c.max_value();
  const auto& slots_order = spec.colour_slots();
  out.alpha.resize(slots_order.size());
  for (std::size_t s = 0; s < slots_order.size(); ++s)
    out.alpha[s] = base + static_cast<long>(s + 1);

  auto slots = copy_colours(out.host, g, c, n);
  auto colour_cycle_edge = [&](ThetaIndex x) {
    const std::size_t a = spec.vertex_of(x);
    const std::size_t b = spec.vertex_of(spec.next(x));
    const Rational& alpha = out.alpha[spec.slot_of(x)];
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      auto he = out.host.edge_index(v * n + a, v * n + b);
      slots[*he] = alpha;
    }
  };
  for (int i = 1; i <= spec.l(); ++i) colour_cycle_edge({i, false});
  for (int i = 2; i <= spec.k(); ++i) colour_cycle_edge({i, true});
  out.colouring = finish(std::move(slots));
  return out;
}

EdgeColouring remap_colouring(const Graph& from, const EdgeColouring& c, const Graph& to,
                              std::span<const std::size_t> vertex_map) {
  if (vertex_map.size() != from.vertex_count() || c.size() != from.edge_count())
    throw Error(ErrorCode::parameter, kModule, "remap: size mismatch");
  std::vector<std::optional<Rational>> slots(to.edge_count());
  for (std::size_t e = 0; e < from.edge_count(); ++e) {
    auto te = to.edge_index(vertex_map[from.edge(e).u], vertex_map[from.edge(e).v]);
    if (!te) throw Error(ErrorCode::parameter, kModule, "remap: edge has no image");
    slots[*te] = c[e];
  }
  return finish(std::move(slots));
}

}  // namespace percert
