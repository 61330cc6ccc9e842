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

#ifndef PERCERT_PERCOLATION_HPP
#define PERCERT_PERCOLATION_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "percert/graph.hpp"

namespace percert {

/// Subset of a host graph's edges, bit-indexed by edge index.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  EdgeSet(std::size_t universe, std::initializer_list<std::size_t> members);
  static EdgeSet all(std::size_t universe);

  std::size_t universe() const { return universe_; }
  bool contains(std::size_t e) const { return (words_.at(e / 64) >> (e % 64)) & 1U; }
  void insert(std::size_t e);
  void erase(std::size_t e);
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<std::size_t> members() const;
  bool is_subset_of(const EdgeSet& other) const;
  EdgeSet& operator|=(const EdgeSet& other);

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct PercolationTrace {
  EdgeSet initial;
  std::vector<EdgeSet> rounds;  // disjoint deltas, one per synchronous round
  EdgeSet final;
};

/// Runs r-bond bootstrap percolation to its fixed point. A healthy edge uv
/// becomes infected once u or v already has >= r infected incident edges.
PercolationTrace closure(const Graph& g, const EdgeSet& seed, int r);

bool percolates(const Graph& g, const EdgeSet& seed, int r);

/// Requires seed to percolate. True iff removing any single member breaks
/// percolation.
bool is_minimal_percolating(const Graph& g, const EdgeSet& seed, int r);

}  // namespace percert

#endif  // PERCERT_PERCOLATION_HPP
