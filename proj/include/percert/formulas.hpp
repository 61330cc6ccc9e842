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

#ifndef PERCERT_FORMULAS_HPP
#define PERCERT_FORMULAS_HPP

// Closed-form values of m_e on products with trees, stars and theta graphs.
// Per-graph inputs are m_e (or dim W) at the thresholds each formula needs,
// plus degree histograms; m_e(G, r) for r <= 0 is taken to be 0.

#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "percert/graph.hpp"

namespace percert {

enum class FormulaKind { exact, upper_bound, lower_bound };

const char* formula_kind_name(FormulaKind kind);

struct FormulaResult {
  std::int64_t value = 0;
  FormulaKind kind = FormulaKind::upper_bound;
  std::string hypothesis;
};

class TokenIssuer;

/// States that m_e(G, i) = dim W^i_{G,c} for every i in `thresholds`, for
/// one fixed colouring c of the graph with the stored histogram. Only the
/// certifier can create one.
class HypothesisToken {
 public:
  const std::string& graph_id() const { return graph_id_; }
  const DegreeHistogram& histogram() const { return histogram_; }
  const std::set<int>& thresholds() const { return thresholds_; }
  const std::string& colouring() const { return colouring_; }
  bool covers(const DegreeHistogram& h, std::initializer_list<int> needed) const;
  std::string describe() const;

 private:
  friend class TokenIssuer;
  HypothesisToken(std::string graph_id, DegreeHistogram h, std::set<int> thresholds,
                  std::string colouring)
      : graph_id_(std::move(graph_id)),
        histogram_(std::move(h)),
        thresholds_(std::move(thresholds)),
        colouring_(std::move(colouring)) {}

  std::string graph_id_;
  DegreeHistogram histogram_;
  std::set<int> thresholds_;
  std::string colouring_;
};

FormulaResult formula_tree_upper(std::int64_t me_r, std::int64_t me_r1, const DegreeHistogram& hg,
                                 const DegreeHistogram& ht, int n, int r);

FormulaResult formula_tree_lower(std::int64_t dim_r, std::int64_t dim_r1, const DegreeHistogram& hg,
                                 const DegreeHistogram& ht, int n, int r);

/// Exact when T is a path or min degree of G is at least r - 2, and the
/// token covers thresholds r - 1 and r. Otherwise returns the upper bound.
FormulaResult formula_tree_exact(std::int64_t me_r, std::int64_t me_r1, const DegreeHistogram& hg,
                                 const DegreeHistogram& ht, int n, int r,
                                 const HypothesisToken* token);

/// True iff the tree upper and lower bounds coincide for these histograms
/// (with m_e = dim at r - 1 and r).
bool bounds_match_predicate(const DegreeHistogram& hg, const DegreeHistogram& ht, int r);

FormulaResult formula_star_general(std::int64_t me_r, std::int64_t me_r1, const DegreeHistogram& hg,
                                   int k, int r, const HypothesisToken* token);

FormulaResult formula_theta_general(std::int64_t me_r, std::int64_t me_r1, std::int64_t me_r2,
                                    const DegreeHistogram& hg, int k, int l, int r,
                                    const HypothesisToken* token);

FormulaResult formula_path_corollary(std::int64_t me_r, std::int64_t me_r1, const DegreeHistogram& hg,
                                     int n, int r, const HypothesisToken* token);

/// One factor of a product of paths, stars and theta graphs.
struct ChainStep {
  FamilyKind kind;  // path, star or theta
  int a = 0;        // n for paths, k for stars and thetas
  int b = 0;        // l for thetas
};

/// m_e(G_1 x ... x G_p, r) by the one-step formulas applied from K_1, with
/// histograms tracked by convolution. Exact for every threshold.
FormulaResult formula_product_chain(const std::vector<ChainStep>& steps, int r);

/// All thresholds 0..r at once; entry i is m_e(product, i).
std::vector<std::int64_t> product_chain_table(const std::vector<ChainStep>& steps, int r);

FormulaResult formula_star_product(const std::vector<int>& a, int r);

FormulaResult formula_theta_product(const std::vector<std::pair<int, int>>& pairs, int r);

}  // namespace percert

#endif  // PERCERT_FORMULAS_HPP
