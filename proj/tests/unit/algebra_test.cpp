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

#include "doctest.h"
#include "percert/error.hpp"
#include "percert/polynomial.hpp"
#include "percert/rational.hpp"
#include "percert/rational_matrix.hpp"

using namespace percert;

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(format_rational(Rational(6, 4)) == "3/2");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("polynomials") {
  const Rational roots[] = {Rational(1), Rational(2)};
  const Polynomial p = Polynomial::from_roots(roots);
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(1) == 0);
  CHECK(p.evaluate(2) == 0);
  CHECK(p.evaluate(0) == 2);
  CHECK((p - p).is_zero());
  CHECK(Polynomial().degree() == -1);
  CHECK((Polynomial::linear_root(3) * Polynomial::constant(2)).evaluate(4) == 2);
  CHECK(Polynomial(std::vector<Rational>{1, 0, 0}).degree() == 0);
}

TEST_CASE("exact rank and nullspace") {
  RationalMatrix m(3, 4);
  const int rows[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = rows[i][j];
  CHECK(m.rank() == 2);
  const auto ns = m.nullspace();
  CHECK(ns.size() == 2);
  for (const auto& v : ns)
    for (std::size_t i = 0; i < 3; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < 4; ++j) s += m(i, j) * v[j];
      CHECK(s == 0);
    }

  SUBCASE("hilbert 6x6 is full rank") {
    RationalMatrix h(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) h(i, j) = Rational(1, static_cast<long>(i + j + 1));
    CHECK(h.rank() == 6);
    CHECK(h.nullspace().empty());
  }

  SUBCASE("empty shapes") {
    CHECK(RationalMatrix(0, 5).rank() == 0);
    CHECK(RationalMatrix(0, 5).nullspace().size() == 5);
  }
}
