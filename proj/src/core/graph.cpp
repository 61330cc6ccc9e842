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

#include "percert/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "percert/error.hpp"

namespace percert {

namespace {

constexpr const char* kModule = "graph-core";

[[noreturn]] void param_error(const std::string& msg) {
  throw Error(ErrorCode::parameter, kModule, msg);
}

std::string atom_to_string(const Atom& a) {
  if (const auto* i = std::get_if<std::int64_t>(&a)) return std::to_string(*i);
  return std::get<std::string>(a);
}

}  // namespace

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::parse: return "parse";
    case ErrorCode::parameter: return "parameter";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::io: return "io";
    case ErrorCode::cap_exceeded: return "cap-exceeded";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

std::string VertexLabel::to_string() const {
  if (path.size() == 1) return atom_to_string(path.front());
  std::string out = "(";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ",";
    out += atom_to_string(path[i]);
  }
  return out + ")";
}

std::strong_ordering operator<=>(const VertexLabel& a, const VertexLabel& b) {
  const std::size_t n = std::min(a.path.size(), b.path.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Atom& x = a.path[i];
    const Atom& y = b.path[i];
    if (x.index() != y.index()) return x.index() <=> y.index();
    if (x.index() == 0) {
      auto c = std::get<0>(x) <=> std::get<0>(y);
      if (c != 0) return c;
    } else {
      int c = std::get<1>(x).compare(std::get<1>(y));
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return a.path.size() <=> b.path.size();
}

VertexLabel join_labels(const VertexLabel& a, const VertexLabel& b) {
  VertexLabel out = a;
  out.path.insert(out.path.end(), b.path.begin(), b.path.end());
  return out;
}

// --- DegreeHistogram --------------------------------------------------------

DegreeHistogram::DegreeHistogram(std::map<int, std::int64_t> counts) {
  for (auto [d, c] : counts) {
    if (c != 0) counts_[d] = c;
  }
}

std::int64_t DegreeHistogram::count(int degree) const {
  auto it = counts_.find(degree);
  return it == counts_.end() ? 0 : it->second;
}

std::int64_t DegreeHistogram::vertex_total() const {
  std::int64_t s = 0;
  for (auto [d, c] : counts_) s += c;
  return s;
}

std::int64_t DegreeHistogram::degree_total() const {
  std::int64_t s = 0;
  for (auto [d, c] : counts_) s += static_cast<std::int64_t>(d) * c;
  return s;
}

int DegreeHistogram::min_degree() const {
  return counts_.empty() ? -1 : counts_.begin()->first;
}

int DegreeHistogram::max_degree() const {
  return counts_.empty() ? -1 : counts_.rbegin()->first;
}

DegreeHistogram DegreeHistogram::convolve(const DegreeHistogram& other) const {
  std::map<int, std::int64_t> out;
  for (auto [d1, c1] : counts_)
    for (auto [d2, c2] : other.counts_) out[d1 + d2] += c1 * c2;
  return DegreeHistogram(std::move(out));
}

const char* family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::star: return "star";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::theta: return "theta";
    case FamilyKind::file: return "file";
    case FamilyKind::product: return "prod";
    case FamilyKind::custom: return "custom";
  }
  return "custom";
}

// --- ThetaSpec ---------------------------------------------------------------

ThetaSpec::ThetaSpec(int k, int l) : k_(k), l_(l) {
  if (l < 3) param_error("theta(k,l) requires l >= 3, got l=" + std::to_string(l));
  if (k < l) {
    param_error("theta(k,l) requires k >= l, got k=" + std::to_string(k) +
                ", l=" + std::to_string(l));
  }
  order_ = {{1, false}, {2, false}};
  slots_ = {{1, false}, {2, false}, {2, true}};
  for (int i = 3; i <= k; ++i) {
    if (i <= l) {
      order_.push_back({i, false});
      slots_.push_back({i, false});
    }
    order_.push_back({i, true});
    slots_.push_back({i, true});
  }
}

ThetaIndex ThetaSpec::canonical(ThetaIndex x) const {
  if (x.primed && (x.i == 1 || x.i == 2)) return {x.i, false};
  return x;
}

std::size_t ThetaSpec::vertex_of(ThetaIndex x) const {
  x = canonical(x);
  auto it = std::find(order_.begin(), order_.end(), x);
  if (it == order_.end()) param_error("theta index out of range");
  return static_cast<std::size_t>(it - order_.begin());
}

std::size_t ThetaSpec::slot_of(ThetaIndex x) const {
  if (x.primed && x.i == 1) x.primed = false;
  auto it = std::find(slots_.begin(), slots_.end(), x);
  if (it == slots_.end()) param_error("theta colour slot out of range");
  return static_cast<std::size_t>(it - slots_.begin());
}

ThetaIndex ThetaSpec::next(ThetaIndex x) const {
  if (!x.primed) return {x.i < l_ ? x.i + 1 : 1, false};
  return {x.i < k_ ? x.i + 1 : 1, true};
}

ThetaIndex ThetaSpec::prev(ThetaIndex x) const {
  if (!x.primed) return {x.i > 1 ? x.i - 1 : l_, false};
  return {x.i > 1 ? x.i - 1 : k_, true};
}

VertexLabel ThetaSpec::label_of(ThetaIndex x) const {
  x = canonical(x);
  if (!x.primed) return VertexLabel::of(static_cast<std::int64_t>(x.i));
  return VertexLabel::of(std::to_string(x.i) + "'");
}

// --- Graph -------------------------------------------------------------------

Graph::Graph(std::vector<VertexLabel> vertices,
             std::vector<std::pair<std::size_t, std::size_t>> edges,
             GraphProvenance provenance)
    : labels_(std::move(vertices)), provenance_(std::move(provenance)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second)
      param_error("duplicate vertex label " + labels_[i].to_string());
  }
  std::vector<std::pair<std::size_t, std::size_t>> norm;
  norm.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= labels_.size() || b >= labels_.size()) param_error("edge endpoint out of range");
    if (a == b) param_error("loop at vertex " + labels_[a].to_string());
    norm.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(norm.begin(), norm.end());
  if (std::adjacent_find(norm.begin(), norm.end()) != norm.end())
    param_error("multi-edge in graph");
  adjacency_.assign(labels_.size(), {});
  incidence_.assign(labels_.size(), {});
  edges_.reserve(norm.size());
  for (auto [a, b] : norm) {
    const std::size_t e = edges_.size();
    edges_.push_back({a, b});
    edge_lookup_.emplace(std::pair{a, b}, e);
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
    incidence_[a].push_back(e);
    incidence_[b].push_back(e);
  }
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    // keep neighbours and incident edges aligned and sorted by neighbour
    std::vector<std::pair<std::size_t, std::size_t>> both;
    for (std::size_t j = 0; j < adjacency_[v].size(); ++j)
      both.emplace_back(adjacency_[v][j], incidence_[v][j]);
    std::sort(both.begin(), both.end());
    for (std::size_t j = 0; j < both.size(); ++j) {
      adjacency_[v][j] = both[j].first;
      incidence_[v][j] = both[j].second;
    }
  }
}

std::optional<std::size_t> Graph::find(const VertexLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Graph::edge_index(std::size_t u, std::size_t v) const {
  auto it = edge_lookup_.find({std::min(u, v), std::max(u, v)});
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

int Graph::min_degree() const {
  if (labels_.empty()) return -1;
  std::size_t m = adjacency_[0].size();
  for (const auto& a : adjacency_) m = std::min(m, a.size());
  return static_cast<int>(m);
}

int Graph::max_degree() const {
  std::size_t m = 0;
  if (labels_.empty()) return -1;
  for (const auto& a : adjacency_) m = std::max(m, a.size());
  return static_cast<int>(m);
}

std::string Graph::id() const {
  if (!provenance_.name.empty()) return provenance_.name;
  std::ostringstream os;
  for (const auto& l : labels_) os << l.to_string() << ';';
  os << '|';
  for (const auto& e : edges_) os << e.u << '-' << e.v << ';';
  return "anon:" + std::to_string(std::hash<std::string>{}(os.str())) + ":" +
         std::to_string(labels_.size()) + ":" + std::to_string(edges_.size());
}

// --- families ----------------------------------------------------------------

namespace {

GraphProvenance family_provenance(FamilyKind kind, std::vector<int> params) {
  GraphProvenance p;
  p.kind = kind;
  p.params = params;
  p.name = family_kind_name(kind);
  p.name += "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) p.name += ",";
    p.name += std::to_string(params[i]);
  }
  p.name += ")";
  return p;
}

std::vector<VertexLabel> integer_labels(int n) {
  std::vector<VertexLabel> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(VertexLabel::of(static_cast<std::int64_t>(i)));
  return out;
}

}  // namespace

Graph make_path(int n) {
  if (n < 1) param_error("path(n) requires n >= 1, got n=" + std::to_string(n));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(integer_labels(n), std::move(edges), family_provenance(FamilyKind::path, {n}));
}

Graph make_star(int k) {
  if (k < 1) param_error("star(k) requires k >= 1, got k=" + std::to_string(k));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
  return Graph(integer_labels(k + 1), std::move(edges), family_provenance(FamilyKind::star, {k}));
}

Graph make_cycle(int n) {
  if (n < 3) param_error("cycle(n) requires n >= 3, got n=" + std::to_string(n));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(integer_labels(n), std::move(edges), family_provenance(FamilyKind::cycle, {n}));
}

Graph make_complete(int n) {
  if (n < 1) param_error("complete(n) requires n >= 1, got n=" + std::to_string(n));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(integer_labels(n), std::move(edges),
               family_provenance(FamilyKind::complete, {n}));
}

Graph make_theta(int k, int l) {
  ThetaSpec spec(k, l);
  std::vector<VertexLabel> labels;
  for (const auto& x : spec.order()) labels.push_back(spec.label_of(x));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (int i = 1; i <= l; ++i) {
    ThetaIndex x{i, false};
    edges.emplace_back(spec.vertex_of(x), spec.vertex_of(spec.next(x)));
  }
  for (int i = 2; i <= k; ++i) {
    ThetaIndex x{i, true};
    edges.emplace_back(spec.vertex_of(x), spec.vertex_of(spec.next(x)));
  }
  auto prov = family_provenance(FamilyKind::theta, {k, l});
  prov.theta = spec;
  return Graph(std::move(labels), std::move(edges), std::move(prov));
}

Graph make_k1() { return make_path(1); }

Graph make_family(const FamilyDescriptor& spec) {
  auto need = [&](std::size_t n) {
    if (spec.params.size() != n) {
      param_error(std::string(family_kind_name(spec.kind)) + " expects " + std::to_string(n) +
                  " parameter(s), got " + std::to_string(spec.params.size()));
    }
  };
  switch (spec.kind) {
    case FamilyKind::path: need(1); return make_path(spec.params[0]);
    case FamilyKind::star: need(1); return make_star(spec.params[0]);
    case FamilyKind::cycle: need(1); return make_cycle(spec.params[0]);
    case FamilyKind::complete: need(1); return make_complete(spec.params[0]);
    case FamilyKind::theta: need(2); return make_theta(spec.params[0], spec.params[1]);
    default: break;
  }
  param_error("make_family: not a parameterized family");
}

// --- products ----------------------------------------------------------------

Graph cartesian_product(const Graph& f, const Graph& h) {
  if (f.vertex_count() == 0 || h.vertex_count() == 0)
    param_error("cartesian_product requires nonempty vertex sets");
  const std::size_t nh = h.vertex_count();
  std::vector<VertexLabel> labels;
  labels.reserve(f.vertex_count() * nh);
  for (std::size_t a = 0; a < f.vertex_count(); ++a)
    for (std::size_t b = 0; b < nh; ++b) labels.push_back(join_labels(f.label(a), h.label(b)));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(f.vertex_count() * h.edge_count() + nh * f.edge_count());
  for (std::size_t a = 0; a < f.vertex_count(); ++a)
    for (const auto& e : h.edges()) edges.emplace_back(a * nh + e.u, a * nh + e.v);
  for (const auto& e : f.edges())
    for (std::size_t b = 0; b < nh; ++b) edges.emplace_back(e.u * nh + b, e.v * nh + b);

  GraphProvenance prov;
  prov.kind = FamilyKind::product;
  auto add_factors = [&](const Graph& g) {
    if (g.provenance().kind == FamilyKind::product) {
      for (const auto& x : g.provenance().factors) prov.factors.push_back(x);
    } else {
      prov.factors.push_back(std::make_shared<const Graph>(g));
    }
  };
  add_factors(f);
  add_factors(h);
  bool named = true;
  for (const auto& x : prov.factors) named = named && !x->name().empty();
  if (named) {
    prov.name = "prod(";
    for (std::size_t i = 0; i < prov.factors.size(); ++i) {
      if (i) prov.name += ",";
      prov.name += prov.factors[i]->name();
    }
    prov.name += ")";
  }
  return Graph(std::move(labels), std::move(edges), std::move(prov));
}

Graph product_of(const std::vector<std::shared_ptr<const Graph>>& factors) {
  if (factors.empty()) return make_k1();
  Graph acc = *factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = cartesian_product(acc, *factors[i]);
  return acc;
}

DegreeHistogram degree_histogram(const Graph& g) {
  std::map<int, std::int64_t> counts;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) counts[static_cast<int>(g.degree(v))] += 1;
  return DegreeHistogram(std::move(counts));
}

bool is_tree(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || g.edge_count() + 1 != n) return false;
  std::vector<char> seen(n, 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto w : g.neighbours(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_path_graph(const Graph& g) { return is_tree(g) && g.max_degree() <= 2; }

// --- rooted trees ------------------------------------------------------------

std::vector<std::size_t> RootedTree::subtree(std::size_t i) const {
  std::vector<std::size_t> out{i};
  for (std::size_t head = 0; head < out.size(); ++head)
    for (auto c : children.at(out[head])) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

bool RootedTree::in_subtree(std::size_t root, std::size_t x) const {
  while (x != npos) {
    if (x == root) return true;
    x = parent.at(x);
  }
  return false;
}

RootedTree root_tree_at_leaf(const Graph& t, std::optional<VertexLabel> leaf) {
  if (!is_tree(t)) throw Error(ErrorCode::precondition, kModule, "graph is not a tree");
  if (t.vertex_count() < 2)
    throw Error(ErrorCode::precondition, kModule, "tree must have at least 2 vertices");
  std::size_t root = RootedTree::npos;
  if (leaf) {
    auto idx = t.find(*leaf);
    if (!idx) throw Error(ErrorCode::precondition, kModule, "unknown vertex " + leaf->to_string());
    if (t.degree(*idx) != 1)
      throw Error(ErrorCode::precondition, kModule, "vertex " + leaf->to_string() + " is not a leaf");
    root = *idx;
  } else {
    for (std::size_t v = 0; v < t.vertex_count(); ++v) {
      if (t.degree(v) != 1) continue;
      if (root == RootedTree::npos || t.label(v) < t.label(root)) root = v;
    }
  }

  const std::size_t n = t.vertex_count();
  RootedTree out;
  std::vector<std::size_t> new_of(n, RootedTree::npos);
  out.original.push_back(root);
  new_of[root] = 0;
  out.level.push_back(0);
  out.parent.push_back(RootedTree::npos);
  for (std::size_t head = 0; head < out.original.size(); ++head) {
    const std::size_t v = out.original[head];
    for (auto w : t.neighbours(v)) {
      if (new_of[w] != RootedTree::npos) continue;
      new_of[w] = out.original.size();
      out.original.push_back(w);
      out.level.push_back(out.level[head] + 1);
      out.parent.push_back(head);
    }
  }
  out.children.assign(n, {});
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i < n; ++i) {
    out.children[out.parent[i]].push_back(i);
    edges.emplace_back(out.parent[i], i);
  }
  GraphProvenance prov;
  prov.kind = FamilyKind::custom;
  out.tree = Graph(integer_labels(static_cast<int>(n)), std::move(edges), std::move(prov));
  return out;
}

}  // namespace percert
