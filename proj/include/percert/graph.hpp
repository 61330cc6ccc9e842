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

#ifndef PERCERT_GRAPH_HPP
#define PERCERT_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace percert {

/// A single label component: either an integer index or a string.
/// Integers order before strings.
using Atom = std::variant<std::int64_t, std::string>;

struct VertexLabel {
  std::vector<Atom> path;

  VertexLabel() = default;
  explicit VertexLabel(std::vector<Atom> p) : path(std::move(p)) {}
  static VertexLabel of(std::int64_t i) { return VertexLabel({Atom{i}}); }
  static VertexLabel of(std::string s) { return VertexLabel({Atom{std::move(s)}}); }

  std::size_t arity() const { return path.size(); }
  std::string to_string() const;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
  friend std::strong_ordering operator<=>(const VertexLabel& a, const VertexLabel& b);
};

/// Concatenation of label paths; used to flatten product labels.
VertexLabel join_labels(const VertexLabel& a, const VertexLabel& b);

struct Edge {
  std::size_t u;  // always u < v
  std::size_t v;
  std::size_t other(std::size_t w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Counts of vertices by degree. Missing (and negative) degrees report 0.
class DegreeHistogram {
 public:
  DegreeHistogram() = default;
  explicit DegreeHistogram(std::map<int, std::int64_t> counts);

  std::int64_t count(int degree) const;
  const std::map<int, std::int64_t>& counts() const { return counts_; }
  std::int64_t vertex_total() const;
  std::int64_t degree_total() const;  // = 2|E|
  int min_degree() const;             // -1 when empty
  int max_degree() const;             // -1 when empty

  /// Histogram of a Cartesian product: degrees add, counts multiply.
  DegreeHistogram convolve(const DegreeHistogram& other) const;

  friend bool operator==(const DegreeHistogram&, const DegreeHistogram&) = default;

 private:
  std::map<int, std::int64_t> counts_;
};

enum class FamilyKind { path, star, cycle, complete, theta, file, product, custom };

const char* family_kind_name(FamilyKind kind);

/// Theta graph H_{k,l}: two degree-3 vertices joined by paths of length
/// 1, l-1 and k-1. Vertices are 1..l on the l-cycle and 1'..k' on the
/// k-cycle, with 1' = 1 and 2' = 2.
struct ThetaIndex {
  int i = 1;
  bool primed = false;
  friend bool operator==(const ThetaIndex&, const ThetaIndex&) = default;
};

class ThetaSpec {
 public:
  ThetaSpec(int k, int l);

  int k() const { return k_; }
  int l() const { return l_; }
  std::size_t vertex_count() const { return static_cast<std::size_t>(k_ + l_ - 2); }

  /// I = [l] u [k'] \ {1', 2'} in the order 1 < 1' < 2 < 2' < 3 < 3' < ...
  const std::vector<ThetaIndex>& order() const { return order_; }

  /// Colour slots I u {2'} in the same order.
  const std::vector<ThetaIndex>& colour_slots() const { return slots_; }

  ThetaIndex canonical(ThetaIndex x) const;
  std::size_t vertex_of(ThetaIndex x) const;
  std::size_t slot_of(ThetaIndex x) const;  // 1' aliases 1
  ThetaIndex next(ThetaIndex x) const;      // successor on x's own cycle
  ThetaIndex prev(ThetaIndex x) const;
  VertexLabel label_of(ThetaIndex x) const;

 private:
  int k_;
  int l_;
  std::vector<ThetaIndex> order_;
  std::vector<ThetaIndex> slots_;
};

class Graph;

/// Construction metadata retained from the family DSL.
struct GraphProvenance {
  FamilyKind kind = FamilyKind::custom;
  std::vector<int> params;
  std::vector<std::shared_ptr<const Graph>> factors;  // flat, for products
  std::optional<ThetaSpec> theta;
  std::string name;
};

class Graph {
 public:
  Graph() = default;
  /// Edges are given as vertex-index pairs. Loops, duplicates and
  /// out-of-range indices throw.
  Graph(std::vector<VertexLabel> vertices,
        std::vector<std::pair<std::size_t, std::size_t>> edges,
        GraphProvenance provenance = {});

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const VertexLabel& label(std::size_t v) const { return labels_.at(v); }
  const std::vector<VertexLabel>& labels() const { return labels_; }
  std::optional<std::size_t> find(const VertexLabel& label) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  std::optional<std::size_t> edge_index(std::size_t u, std::size_t v) const;

  std::span<const std::size_t> neighbours(std::size_t v) const { return adjacency_.at(v); }
  std::span<const std::size_t> incident_edges(std::size_t v) const { return incidence_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
  int min_degree() const;
  int max_degree() const;

  const GraphProvenance& provenance() const { return provenance_; }
  const std::string& name() const { return provenance_.name; }
  /// Stable identifier: the DSL name when present, else a content digest.
  std::string id() const;

 private:
  std::vector<VertexLabel> labels_;
  std::map<VertexLabel, std::size_t> index_;
  std::vector<Edge> edges_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_lookup_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::vector<std::size_t>> incidence_;
  GraphProvenance provenance_;
};

struct FamilyDescriptor {
  FamilyKind kind;
  std::vector<int> params;
};

Graph make_family(const FamilyDescriptor& spec);
Graph make_path(int n);
Graph make_star(int k);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_theta(int k, int l);
Graph make_k1();

/// F x H with tuple labels. Product-of-products flattens both labels and
/// the factor list in the provenance.
Graph cartesian_product(const Graph& f, const Graph& h);

/// Folds cartesian_product left to right over the factors.
Graph product_of(const std::vector<std::shared_ptr<const Graph>>& factors);

DegreeHistogram degree_histogram(const Graph& g);

bool is_tree(const Graph& g);
bool is_path_graph(const Graph& g);

/// A tree rooted at a leaf and relabelled 0..n-1 in BFS order, so levels are
/// nondecreasing in the label. Children are kept in canonical order.
struct RootedTree {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Graph tree;                        // integer labels 0..n-1
  std::vector<std::size_t> original; // new index -> index in the source graph
  std::vector<int> level;
  std::vector<std::size_t> parent;   // npos for the root
  std::vector<std::vector<std::size_t>> children;

  std::size_t order() const { return original.size(); }
  /// Vertices of T_i, the component containing i after deleting its parent
  /// edge.
  std::vector<std::size_t> subtree(std::size_t i) const;
  bool in_subtree(std::size_t root, std::size_t x) const;
};

RootedTree root_tree_at_leaf(const Graph& t, std::optional<VertexLabel> leaf = std::nullopt);

}  // namespace percert

#endif  // PERCERT_GRAPH_HPP
