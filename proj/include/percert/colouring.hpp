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

#ifndef PERCERT_COLOURING_HPP
#define PERCERT_COLOURING_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "percert/graph.hpp"
#include "percert/rational.hpp"

namespace percert {

/// Edge colouring keyed by the host graph's edge index.
class EdgeColouring {
 public:
  EdgeColouring() = default;
  explicit EdgeColouring(std::vector<Rational> colours) : colours_(std::move(colours)) {}

  std::size_t size() const { return colours_.size(); }
  const Rational& operator[](std::size_t e) const { return colours_.at(e); }
  const std::vector<Rational>& colours() const { return colours_; }
  std::set<Rational> palette() const;
  /// Largest used value; 0 for an empty colouring.
  Rational max_value() const;

  friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

 private:
  std::vector<Rational> colours_;
};

/// True iff c has one colour per edge and all edges at each vertex differ.
bool is_proper(const Graph& g, const EdgeColouring& c);

/// Smallest-available integer colour per edge, visiting edges in graph order.
EdgeColouring greedy_proper_colouring(const Graph& g);

/// Same rule but visiting edges in the given permutation of edge indices.
EdgeColouring greedy_proper_colouring(const Graph& g, std::span<const std::size_t> edge_order);

/// A colouring c' of a product G x H built from a colouring of G plus fresh
/// values alpha, none of which lie in the palette of G.
struct ProductColouring {
  Graph host;                 // cartesian_product(G, H') with H' as described per builder
  EdgeColouring colouring;
  std::vector<Rational> alpha;  // indexed per builder, see below
  std::size_t factor_order = 0; // |V(H')|; host vertex (v, h) has index v*factor_order + h
};

/// G x T with T relabelled per `tree`. Copies keep c; the edge between the
/// copy of v at i and its parent gets alpha[i] (alpha[0] unused).
ProductColouring product_colouring_tree(const Graph& g, const EdgeColouring& c,
                                        const RootedTree& tree);

/// G x S_k with centre 0. The edge v_0 v_i gets alpha[i] for i in 1..k.
ProductColouring product_colouring_star(const Graph& g, const EdgeColouring& c, int k);

/// G x H_{k,l}. alpha is indexed by ThetaSpec::colour_slots(); the edge
/// v_i v_{i+1} on either cycle gets alpha[slot_of(i)], with 1' aliasing 1.
ProductColouring product_colouring_theta(const Graph& g, const EdgeColouring& c,
                                         const ThetaSpec& spec);

/// Moves a colouring between graphs given a vertex map from -> to. Every
/// edge of `to` must be the image of an edge of `from`.
EdgeColouring remap_colouring(const Graph& from, const EdgeColouring& c, const Graph& to,
                              std::span<const std::size_t> vertex_map);

}  // namespace percert

#endif  // PERCERT_COLOURING_HPP
