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

#ifndef PERCERT_CONSTRUCTIONS_HPP
#define PERCERT_CONSTRUCTIONS_HPP

// Explicit percolating sets on G x T, G x S_k and G x H_{k,l} assembled from
// percolating sets of G and per-vertex repair edges between copies.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>

#include "percert/graph.hpp"
#include "percert/percolation.hpp"

namespace percert {

/// Returns a smallest percolating set of G at threshold r (edge indices of
/// G). Called with r <= 0 it may return the empty set.
using OptimalSetSupplier = std::function<EdgeSet(int r)>;

struct ConstructionPlan {
  Graph host;
  std::size_t factor_order = 0;            // host vertex (v, h) = v * factor_order + h
  std::map<std::size_t, EdgeSet> base_sets;  // copy index -> edges inside that copy
  EdgeSet cross_edges;
  EdgeSet total;
  std::int64_t formula_size = 0;  // upper-bound value from the supplied set sizes
  bool percolates = false;
};

ConstructionPlan construct_tree_product(const Graph& g, const RootedTree& tree, int r,
                                        const OptimalSetSupplier& opt);

ConstructionPlan construct_star_product(const Graph& g, int k, int r, const OptimalSetSupplier& opt);

/// Requires k >= l >= 4 and r >= 2.
ConstructionPlan construct_theta_product(const Graph& g, const ThetaSpec& spec, int r,
                                         const OptimalSetSupplier& opt);

}  // namespace percert

#endif  // PERCERT_CONSTRUCTIONS_HPP
