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

#ifndef PERCERT_WITNESS_HPP
#define PERCERT_WITNESS_HPP

// The space W^r_{G,c}: vectors (p_v) of polynomials with
// deg p_v <= min(r, deg v) - 1 and p_u(c_uv) = p_v(c_uv) on every edge.
// Its dimension is a lower bound on the smallest r-percolating set.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "percert/colouring.hpp"
#include "percert/graph.hpp"
#include "percert/polynomial.hpp"
#include "percert/rational_matrix.hpp"

namespace percert {

using PolyVector = std::vector<Polynomial>;  // indexed by host vertex
using ZVector = std::vector<Rational>;       // indexed by G vertex

/// Unknown layout of the linear system for W^r: vertices in graph order,
/// coefficients low to high.
struct WLayout {
  std::vector<std::size_t> offset;
  std::vector<int> cap;  // max(0, min(r, deg v)) coefficients per vertex
  std::size_t unknowns = 0;
};

WLayout w_layout(const Graph& g, int r);

std::vector<Rational> flatten(const WLayout& layout, const PolyVector& p);
PolyVector unflatten(const WLayout& layout, const std::vector<Rational>& coefficients);

bool w_membership(const Graph& g, const EdgeColouring& c, int r, const PolyVector& p);

/// One row per edge: sum_j a_{u,j} c^j - sum_j a_{v,j} c^j = 0.
RationalMatrix w_constraint_matrix(const Graph& g, const EdgeColouring& c, int r);

std::int64_t dim_w(const Graph& g, const EdgeColouring& c, int r);

struct FamilyMember {
  PolyVector entries;
  std::string provenance;                // e.g. "A_0", "A_l:3", "X:v=1,i=2"
  std::optional<std::size_t> base_vertex;  // G vertex for X-type members
  std::string group() const { return provenance.substr(0, provenance.find(':')); }
};

struct WitnessFamily {
  Graph host;
  EdgeColouring colouring;
  int r = 0;
  std::size_t factor_order = 1;  // host vertex (v, h) = v * factor_order + h
  std::vector<FamilyMember> members;
  std::size_t claimed_dimension = 0;

  std::map<std::string, std::size_t> group_counts() const;
};

/// Canonical nullspace basis of the constraint system on (G, c).
WitnessFamily basis_of_w(const Graph& g, const EdgeColouring& c, int r);

/// p(z): entry (u, h) is p_{(u,h)}(z_u). p lives on G x H with |V(H)| =
/// factor_order. Every z_u must be the colour of an edge at u.
std::vector<Rational> z_evaluate(const Graph& g, const EdgeColouring& c, const PolyVector& p,
                                 std::size_t factor_order, const ZVector& z);

/// Finds z in Z_c with p(z) nonzero at `base`, by trying the incident
/// colours at base's G-coordinate.
ZVector zeros_lemma_witness(const Graph& g, const EdgeColouring& c, const PolyVector& p,
                            std::size_t factor_order, std::size_t base);

struct FamilyReport {
  bool members_in_w = true;
  std::size_t rank = 0;
  bool x_members_vanish = true;
  std::vector<std::string> failures;
  bool ok(std::size_t claimed) const {
    return members_in_w && x_members_vanish && rank == claimed && failures.empty();
  }
};

/// Checks membership of every member in W^r on the family's host, the rank
/// of the stacked coefficients, and that each X-type member is supported on
/// copies of its base vertex v and vanishes at every colour c_uv, u ~ v.
FamilyReport verify_family(const WitnessFamily& family, const Graph& g, const EdgeColouring& c);

/// Independent vectors of W^r on G x T built from bases of W^r and W^{r-1}
/// on G. Requires r >= 1.
WitnessFamily tree_witness_family(const Graph& g, const EdgeColouring& c, const RootedTree& tree,
                                  int r);

/// Same for G x S_k. Requires k >= 1, r >= 1.
WitnessFamily star_witness_family(const Graph& g, const EdgeColouring& c, int k, int r);

/// Same for G x H_{k,l}, using bases at r, r-1, r-2. Requires k >= l >= 4,
/// r >= 2.
WitnessFamily theta_witness_family(const Graph& g, const EdgeColouring& c, const ThetaSpec& spec,
                                   int r);

}  // namespace percert

#endif  // PERCERT_WITNESS_HPP
