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

#ifndef PERCERT_TESTS_HELPERS_HPP
#define PERCERT_TESTS_HELPERS_HPP

#include <cstdint>
#include <initializer_list>
#include <utility>

#include "percert/graph.hpp"
#include "percert/percolation.hpp"

namespace testing {

// Edge set from pairs of integer labels.
inline percert::EdgeSet edges_of(const percert::Graph& g,
                                 std::initializer_list<std::pair<std::int64_t, std::int64_t>> pairs) {
  percert::EdgeSet s(g.edge_count());
  for (auto [a, b] : pairs) {
    auto u = g.find(percert::VertexLabel::of(a));
    auto v = g.find(percert::VertexLabel::of(b));
    s.insert(*g.edge_index(*u, *v));
  }
  return s;
}

inline percert::Graph graph_from_pairs(std::size_t n,
                                       std::vector<std::pair<std::size_t, std::size_t>> edges) {
  std::vector<percert::VertexLabel> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(percert::VertexLabel::of(static_cast<std::int64_t>(i)));
  return percert::Graph(std::move(labels), std::move(edges));
}

}  // namespace testing

#endif  // PERCERT_TESTS_HELPERS_HPP
