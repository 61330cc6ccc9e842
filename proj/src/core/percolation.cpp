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

#include "percert/percolation.hpp"

#include <bit>

#include "percert/error.hpp"

namespace percert {

namespace {

constexpr const char* kModule = "percolation";

void check_seed(const Graph& g, const EdgeSet& seed, int r) {
  if (seed.universe() != g.edge_count())
    throw Error(ErrorCode::precondition, kModule, "edge set does not belong to this graph");
  if (r < 0) throw Error(ErrorCode::parameter, kModule, "threshold r must be >= 0");
}

}  // namespace

EdgeSet::EdgeSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : EdgeSet(universe) {
  for (auto e : members) insert(e);
}

EdgeSet EdgeSet::all(std::size_t universe) {
  EdgeSet s(universe);
  for (std::size_t e = 0; e < universe; ++e) s.insert(e);
  return s;
}

void EdgeSet::insert(std::size_t e) {
  if (e >= universe_) throw Error(ErrorCode::precondition, kModule, "edge index out of range");
  words_[e / 64] |= std::uint64_t{1} << (e % 64);
}

void EdgeSet::erase(std::size_t e) {
  if (e >= universe_) throw Error(ErrorCode::precondition, kModule, "edge index out of range");
  words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
}

std::size_t EdgeSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> EdgeSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < universe_; ++e)
    if (contains(e)) out.push_back(e);
  return out;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  if (other.universe_ != universe_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  if (other.universe_ != universe_)
    throw Error(ErrorCode::precondition, kModule, "edge sets over different graphs");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

PercolationTrace closure(const Graph& g, const EdgeSet& seed, int r) {
  check_seed(g, seed, r);
  PercolationTrace trace{seed, {}, seed};
  if (r == 0) {
    EdgeSet delta(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (!seed.contains(e)) delta.insert(e);
    if (!delta.empty()) trace.rounds.push_back(delta);
    trace.final = EdgeSet::all(g.edge_count());
    return trace;
  }

  const auto threshold = static_cast<std::size_t>(r);
  std::vector<std::size_t> infected_degree(g.vertex_count(), 0);
  for (auto e : seed.members()) {
    ++infected_degree[g.edge(e).u];
    ++infected_degree[g.edge(e).v];
  }
  // every vertex is initially on the frontier
  std::vector<std::size_t> frontier(g.vertex_count());
  for (std::size_t v = 0; v < frontier.size(); ++v) frontier[v] = v;

  EdgeSet& infected = trace.final;
  std::vector<char> on_frontier(g.vertex_count(), 0);
  while (!frontier.empty()) {
    EdgeSet delta(g.edge_count());
    std::vector<std::size_t> added;
    for (auto v : frontier) {
      if (infected_degree[v] < threshold) continue;
      for (auto e : g.incident_edges(v)) {
        if (!infected.contains(e) && !delta.contains(e)) {
          delta.insert(e);
          added.push_back(e);
        }
      }
    }
    if (added.empty()) break;
    std::vector<std::size_t> next;
    for (auto e : added) {
      infected.insert(e);
      for (auto w : {g.edge(e).u, g.edge(e).v}) {
        ++infected_degree[w];
        if (!on_frontier[w]) {
          on_frontier[w] = 1;
          next.push_back(w);
        }
      }
    }
    for (auto w : next) on_frontier[w] = 0;
    trace.rounds.push_back(std::move(delta));
    frontier = std::move(next);
  }
  return trace;
}

bool percolates(const Graph& g, const EdgeSet& seed, int r) {
  return closure(g, seed, r).final.size() == g.edge_count();
}

bool is_minimal_percolating(const Graph& g, const EdgeSet& seed, int r) {
  if (!percolates(g, seed, r))
    throw Error(ErrorCode::precondition, kModule, "edge set does not percolate");
  for (auto e : seed.members()) {
    EdgeSet smaller = seed;
    smaller.erase(e);
    if (percolates(g, smaller, r)) return false;
  }
  return true;
}

}  // namespace percert
