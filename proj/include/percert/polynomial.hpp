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

#ifndef PERCERT_POLYNOMIAL_HPP
#define PERCERT_POLYNOMIAL_HPP

#include <span>
#include <string>
#include <vector>

#include "percert/rational.hpp"

namespace percert {

/// Univariate polynomial over Q, coefficients lowest degree first. The zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);
  /// (x - root)
  static Polynomial linear_root(const Rational& root);
  /// Product of (x - r) over the given roots; 1 for an empty list.
  static Polynomial from_roots(std::span<const Rational> roots);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  /// Coefficient of x^i, 0 beyond the degree.
  Rational coefficient(std::size_t i) const;

  Rational evaluate(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

}  // namespace percert

#endif  // PERCERT_POLYNOMIAL_HPP
