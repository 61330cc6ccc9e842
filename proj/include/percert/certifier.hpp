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

#ifndef PERCERT_CERTIFIER_HPP
#define PERCERT_CERTIFIER_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "percert/colouring.hpp"
#include "percert/constructions.hpp"
#include "percert/formulas.hpp"
#include "percert/graph.hpp"
#include "percert/percolation.hpp"

namespace percert {

inline constexpr std::size_t kDefaultBruteforceCap = 16;
inline constexpr std::size_t kMaxBruteforceCap = 64;

struct CertifierConfig {
  std::size_t bruteforce_cap = kDefaultBruteforceCap;  // max |E| for exhaustive search
  std::vector<std::pair<std::string, EdgeColouring>> extra_colourings;

  /// Default config with the cap taken from PERCERT_BRUTEFORCE_CAP if set.
  static CertifierConfig from_env();
};

struct BruteForceResult {
  std::int64_t value = 0;
  EdgeSet witness;  // lexicographically least percolating set of that size
};

/// Smallest r-percolating set by enumerating subsets of size floor,
/// floor + 1, ... in lexicographic order. `floor` must be a valid lower
/// bound. Refuses graphs with more than `cap` edges.
BruteForceResult brute_force_me(const Graph& g, int r, std::int64_t floor = 0,
                                std::size_t cap = kDefaultBruteforceCap);

/// Edges that no threshold-r process can ever infect: both endpoints have
/// degree at most r. Every percolating set contains them.
EdgeSet forced_edges(const Graph& g, int r);

/// Keeps dropping edges (in order) while the set still percolates.
EdgeSet greedy_descent(const Graph& g, int r, EdgeSet start);

/// The product colouring built factor by factor from K_1, when every factor
/// of g is a path, star, tree or theta graph with l >= 4.
std::optional<EdgeColouring> structural_colouring(const Graph& g);

/// Named proper colourings tried for lower bounds, in a fixed order.
std::vector<std::pair<std::string, EdgeColouring>> candidate_colourings(const Graph& g,
                                                                        const CertifierConfig& cfg);

enum class CertStatus { certified_exact, brute_forced, bounded };

const char* cert_status_name(CertStatus s);

struct CertifiedValue {
  std::string graph_id;
  int r = 0;
  std::int64_t lower = 0;
  std::string lower_source;  // colouring name, "forcing" or "trivial"
  std::int64_t upper = 0;
  EdgeSet witness;
  std::string upper_source;  // "construction", "brute-force", "greedy", "trivial"
  CertStatus status = CertStatus::bounded;
  std::optional<std::int64_t> value;
};

CertifiedValue certify_me(const Graph& g, int r, const CertifierConfig& cfg = CertifierConfig::from_env());

/// A smallest percolating set, memoised per (graph id, r). Throws when only
/// bounds are available.
EdgeSet optimal_set_supplier(const Graph& g, int r, const CertifierConfig& cfg = CertifierConfig::from_env());

/// Upper-bound construction on g from its product structure, mapped to g's
/// edge indices. Empty when g has no usable structure.
std::optional<EdgeSet> structural_construction(const Graph& g, int r, const CertifierConfig& cfg);

/// G = prefix x factor x (K_1 ...), factor the last non-trivial DSL factor.
struct LastFactorSplit {
  enum Kind { tree, star, theta } kind = tree;
  Graph prefix;
  std::shared_ptr<const Graph> factor;
  std::optional<RootedTree> rooted;
  int k = 0;
  std::optional<ThetaSpec> spec;
  std::vector<std::size_t> host_map;  // vertex of cartesian_product(prefix, factor) -> vertex of G
};

const char* split_kind_name(LastFactorSplit::Kind k);

/// nullopt when G has no such factor (or some factor is not a tree, star or theta).
std::optional<LastFactorSplit> split_last_factor(const Graph& g);

/// Construction for G from optimal sets of the prefix, edges mapped into G.
struct ProductConstruction {
  LastFactorSplit split;
  ConstructionPlan plan;
  EdgeSet witness;  // in G
};

ProductConstruction construct_product(const Graph& g, int r, const CertifierConfig& cfg);

class TokenIssuer {
 public:
  /// Issues a token when one colouring c has dim W^i_{G,c} equal to the
  /// certified m_e(G, i) for every requested i.
  static std::optional<HypothesisToken> issue(const Graph& g, const std::vector<int>& thresholds,
                                              const CertifierConfig& cfg);
};

struct TreeProductReport {
  FormulaResult upper;
  FormulaResult lower;
  FormulaResult exact;  // kind exact only when the hypotheses were certified
  bool bounds_match = false;
};

/// Evaluates the tree bounds for G x T using certified values of G.
TreeProductReport tree_product_formulas(const Graph& g, const Graph& t, int r,
                                        const CertifierConfig& cfg);

}  // namespace percert

#endif  // PERCERT_CERTIFIER_HPP
