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

#include "percert/verify.hpp"

#include <algorithm>
#include <sstream>

#include "percert/error.hpp"
#include "percert/spec_parser.hpp"
#include "percert/witness.hpp"

namespace percert {

namespace {

constexpr int kMaxVerifyN = 16;

std::string cell(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

std::optional<std::vector<ChainStep>> chain_steps_of(const Graph& g) {
  std::vector<std::shared_ptr<const Graph>> factors = g.provenance().factors;
  if (g.provenance().kind != FamilyKind::product || factors.empty())
    factors = {std::make_shared<const Graph>(g)};
  std::vector<ChainStep> steps;
  for (const auto& f : factors) {
    const auto& p = f->provenance();
    if (p.kind == FamilyKind::path && p.params.size() == 1) {
      steps.push_back({FamilyKind::path, p.params[0], 0});
    } else if (p.kind == FamilyKind::star && p.params.size() == 1) {
      steps.push_back({FamilyKind::star, p.params[0], 0});
    } else if (p.kind == FamilyKind::theta && p.theta && p.theta->l() >= 4) {
      steps.push_back({FamilyKind::theta, p.theta->k(), p.theta->l()});
    } else {
      return std::nullopt;
    }
  }
  return steps;
}

bool VerifyRow::consistent() const {
  if (formula && *formula != dim_w) return false;
  if (brute_force && *brute_force != dim_w) return false;
  return true;
}

VerifyFamily parse_verify_family(const std::string& name) {
  if (name == "paths") return VerifyFamily::paths;
  if (name == "stars") return VerifyFamily::stars;
  if (name == "thetas") return VerifyFamily::thetas;
  if (name == "mixed") return VerifyFamily::mixed;
  throw Error(ErrorCode::parameter, "certifier",
              "unknown verify family '" + name + "' (paths|stars|thetas|mixed)");
}

std::vector<std::string> verify_instances(VerifyFamily family, int max_n) {
  if (max_n < 1 || max_n > kMaxVerifyN)
    throw Error(ErrorCode::parameter, "certifier",
                "--max-n must be in [1, " + std::to_string(kMaxVerifyN) + "], got " + std::to_string(max_n));
  std::vector<std::string> out;
  const auto n = [](int i) { return std::to_string(i); };
  switch (family) {
    case VerifyFamily::paths:
      for (int i = 2; i <= max_n; ++i) out.push_back("path(" + n(i) + ")");
      break;
    case VerifyFamily::stars:
      for (int i = 1; i <= max_n; ++i) out.push_back("star(" + n(i) + ")");
      break;
    case VerifyFamily::thetas:
      for (int k = 4; k <= max_n; ++k)
        for (int l = 4; l <= k; ++l) out.push_back("theta(" + n(k) + "," + n(l) + ")");
      break;
    case VerifyFamily::mixed:
      for (int i = 2; i <= max_n; ++i) {
        out.push_back("prod(path(2),path(" + n(i) + "))");
        out.push_back("prod(path(2),star(" + n(i) + "))");
        out.push_back("prod(star(2),path(" + n(i) + "))");
        out.push_back("prod(star(2),star(" + n(i) + "))");
      }
      if (max_n >= 4) out.push_back("prod(path(2),theta(4,4))");
      break;
  }
  return out;
}

VerifyRow verify_instance(const std::string& spec, int r, const CertifierConfig& cfg) {
  const Graph g = parse_spec(spec);
  VerifyRow row;
  row.instance = spec;
  if (r >= 0)
    for (const auto& [name, c] : candidate_colourings(g, cfg)) row.dim_w = std::max(row.dim_w, dim_w(g, c, r));
  if (auto steps = chain_steps_of(g)) row.formula = formula_product_chain(*steps, r).value;
  if (auto s = structural_construction(g, r, cfg)) row.construction = static_cast<std::int64_t>(s->size());
  if (g.edge_count() <= cfg.bruteforce_cap) row.brute_force = brute_force_me(g, r, 0, cfg.bruteforce_cap).value;
  row.status = cert_status_name(certify_me(g, r, cfg).status);
  return row;
}

std::vector<VerifyRow> verify_table(VerifyFamily family, int max_n, int r, const CertifierConfig& cfg) {
  if (r < 1) throw Error(ErrorCode::parameter, "certifier", "-r must be positive, got " + std::to_string(r));
  std::vector<VerifyRow> rows;
  for (const auto& spec : verify_instances(family, max_n)) rows.push_back(verify_instance(spec, r, cfg));
  return rows;
}

std::string verify_csv(const std::vector<VerifyRow>& rows) {
  std::ostringstream out;
  out << "instance,dim_w,formula,construction,brute_force,status\n";
  for (const auto& row : rows)
    out << '"' << row.instance << "\"," << row.dim_w << ',' << cell(row.formula) << ','
        << cell(row.construction) << ',' << cell(row.brute_force) << ',' << row.status << '\n';
  return out.str();
}

}  // namespace percert
