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

#ifndef PERCERT_VERIFY_HPP
#define PERCERT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "percert/certifier.hpp"
#include "percert/formulas.hpp"
#include "percert/graph.hpp"

namespace percert {

/// Chain steps read off the DSL factors; nullopt unless every factor is a
/// path, a star or a theta graph with k >= l >= 4.
std::optional<std::vector<ChainStep>> chain_steps_of(const Graph& g);

struct VerifyRow {
  std::string instance;
  std::int64_t dim_w = 0;  // best over the candidate colourings
  std::optional<std::int64_t> formula;
  std::optional<std::int64_t> construction;
  std::optional<std::int64_t> brute_force;  // absent above the cap
  std::string status;

  /// dim_w, formula and brute force (where present) all equal.
  bool consistent() const;
};

enum class VerifyFamily { paths, stars, thetas, mixed };

VerifyFamily parse_verify_family(const std::string& name);

/// Instance specs for a family, sizes up to max_n.
std::vector<std::string> verify_instances(VerifyFamily family, int max_n);

VerifyRow verify_instance(const std::string& spec, int r, const CertifierConfig& cfg);

std::vector<VerifyRow> verify_table(VerifyFamily family, int max_n, int r, const CertifierConfig& cfg);

std::string verify_csv(const std::vector<VerifyRow>& rows);

}  // namespace percert

#endif  // PERCERT_VERIFY_HPP
