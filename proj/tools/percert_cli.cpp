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

// percert command-line front end. Talks to the library through the C API only.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "percert/percert.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNotCertified = 9;

struct GraphDeleter {
  void operator()(percert_graph* g) const { percert_graph_free(g); }
};
using GraphPtr = std::unique_ptr<percert_graph, GraphDeleter>;

void print_error(const std::string& code, const std::string& message) {
  nlohmann::ordered_json j{{"error", {{"code", code}, {"module", "cli"}, {"message", message}}}};
  std::cout << j.dump() << '\n';
}

int fail_from_library(percert_status s) {
  std::cout << percert_last_error() << '\n';
  return static_cast<int>(s);
}

// Prints and frees a library string; returns the exit code. out is read
// only after the call that fills it.
int finish(percert_status s, char*& out) {
  if (s != PERCERT_OK) return fail_from_library(s);
  std::cout << out;
  if (*out && out[std::char_traits<char>::length(out) - 1] != '\n') std::cout << '\n';
  percert_string_free(out);
  return 0;
}

struct UsageError {
  std::string message;
};

GraphPtr load(const std::string& spec, percert_status& status) {
  percert_graph* g = nullptr;
  status = percert_graph_from_spec(spec.c_str(), &g);
  return GraphPtr(g);
}

std::vector<std::pair<int, int>> parse_pairs(const std::vector<std::string>& items) {
  std::vector<std::pair<int, int>> out;
  for (const auto& item : items) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError{"--pairs entries look like k:l, got '" + item + "'"};
    try {
      std::size_t a = 0;
      std::size_t b = 0;
      const int k = std::stoi(item.substr(0, colon), &a);
      const int l = std::stoi(item.substr(colon + 1), &b);
      if (a != colon || b != item.size() - colon - 1) throw std::invalid_argument(item);
      out.emplace_back(k, l);
    } catch (const std::logic_error&) {
      throw UsageError{"--pairs entries look like k:l, got '" + item + "'"};
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"percert: minimum r-bond bootstrap percolating sets with certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(percert_version()));

  int r = 0;
  long max_bf = -1;
  std::string spec;
  std::string tree_spec;
  std::string colouring = "greedy";

  auto add_r = [&](CLI::App* sub) { sub->add_option("-r", r, "threshold r")->required(); };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--max-bruteforce", max_bf, "max edges for exhaustive search (default 16 or PERCERT_BRUTEFORCE_CAP)")
        ->check(CLI::Range(0L, 64L));
  };

  auto* me = app.add_subcommand("me", "certify m_e(G, r)");
  bool certify = false;
  me->add_option("graph", spec, "graph spec")->required();
  add_r(me);
  add_cap(me);
  me->add_flag("--certify", certify, "exit nonzero unless the value is certified-exact or brute-forced");

  auto* dimw = app.add_subcommand("dimw", "dimension of W^r_{G,c}");
  bool basis = false;
  dimw->add_option("graph", spec, "graph spec")->required();
  add_r(dimw);
  dimw->add_option("--colouring", colouring, "greedy | structural | file:PATH");
  dimw->add_flag("--basis", basis, "include a basis");

  auto* construct = app.add_subcommand("construct", "percolating set for a product from optimal sets of its prefix");
  construct->add_option("graph", spec, "product spec")->required();
  add_r(construct);
  add_cap(construct);

  auto* formula = app.add_subcommand("formula", "closed-form values");
  formula->require_subcommand(1);
  auto* stars = formula->add_subcommand("stars", "m_e of a product of stars");
  std::vector<int> leaves;
  stars->add_option("--a", leaves, "comma-separated leaf counts")->required()->delimiter(',');
  add_r(stars);
  auto* theta = formula->add_subcommand("theta", "m_e of a product of theta graphs");
  std::vector<std::string> pair_items;
  theta->add_option("--pairs", pair_items, "comma-separated k:l pairs")->required()->delimiter(',');
  add_r(theta);
  auto* tree_product = formula->add_subcommand("tree-product", "bounds for G x T");
  tree_product->add_option("graph", spec, "G spec")->required();
  tree_product->add_option("tree", tree_spec, "T spec")->required();
  add_r(tree_product);
  add_cap(tree_product);

  auto* witness = app.add_subcommand("witness", "build and check a witness family");
  std::string family;
  witness->add_option("graph", spec, "product spec")->required();
  add_r(witness);
  witness->add_option("--family", family, "tree | star | theta")
      ->required()
      ->check(CLI::IsMember({"tree", "star", "theta"}));
  witness->add_option("--colouring", colouring, "colouring of the prefix: greedy | structural | file:PATH");

  auto* percolate = app.add_subcommand("percolate", "run the process from a seed set");
  std::string seed_path;
  percolate->add_option("graph", spec, "graph spec")->required();
  add_r(percolate);
  percolate->add_option("--seed-edges", seed_path, "JSON array of [u, v]")->required();

  auto* verify = app.add_subcommand("verify", "table of dim_w, formula, construction and brute force");
  std::string verify_family;
  int max_n = 0;
  std::string format = "csv";
  verify->add_option("--family", verify_family, "paths | stars | thetas | mixed")
      ->required()
      ->check(CLI::IsMember({"paths", "stars", "thetas", "mixed"}));
  verify->add_option("--max-n", max_n, "largest family parameter")->required();
  add_r(verify);
  add_cap(verify);
  verify->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("parameter", e.what());
    return kExitUsage;
  }

  try {
    char* out = nullptr;
    percert_status s = PERCERT_OK;

    if (*formula && *stars) return finish(percert_formula_stars(leaves.data(), leaves.size(), r, &out), out);
    if (*formula && *theta) {
      const auto pairs = parse_pairs(pair_items);
      std::vector<int> ks;
      std::vector<int> ls;
      for (auto [k, l] : pairs) {
        ks.push_back(k);
        ls.push_back(l);
      }
      return finish(percert_formula_theta(ks.data(), ls.data(), ks.size(), r, &out), out);
    }
    if (*verify) {
      int consistent = 0;
      return finish(percert_verify(verify_family.c_str(), max_n, r, max_bf, format == "csv", &consistent, &out), out);
    }

    GraphPtr g = load(spec, s);
    if (s != PERCERT_OK) return fail_from_library(s);

    if (*formula && *tree_product) {
      GraphPtr t = load(tree_spec, s);
      if (s != PERCERT_OK) return fail_from_library(s);
      return finish(percert_formula_tree_product(g.get(), t.get(), r, max_bf, &out), out);
    }
    if (*me) {
      int certified = 0;
      const int code = finish(percert_me(g.get(), r, max_bf, &certified, &out), out);
      if (code == 0 && certify && !certified) return kExitNotCertified;
      return code;
    }
    if (*dimw) return finish(percert_dim_w(g.get(), r, colouring.c_str(), basis, &out), out);
    if (*construct) return finish(percert_construct(g.get(), r, max_bf, &out), out);
    if (*witness) return finish(percert_witness(g.get(), r, family.c_str(), colouring.c_str(), &out), out);
    if (*percolate) return finish(percert_percolate(g.get(), r, seed_path.c_str(), &out), out);
  } catch (const UsageError& e) {
    print_error("parameter", e.message);
    return kExitUsage;
  }
  print_error("parameter", "no subcommand");
  return kExitUsage;
}
