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

#ifndef PERCERT_RATIONAL_MATRIX_HPP
#define PERCERT_RATIONAL_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "percert/rational.hpp"

namespace percert {

/// Dense row-major matrix over Q with exact Gauss-Jordan elimination.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

  /// Appends a row; the first row fixes the column count if the matrix is empty.
  void append_row(const std::vector<Rational>& row);

  struct Echelon;
  /// Reduced row-echelon form. Pivot rows are chosen by smallest bit size of
  /// the entry; the reduced form itself is unique.
  Echelon rref() const;
  std::size_t rank() const;
  /// Canonical nullspace basis: one vector per free column f with a 1 in
  /// position f, ordered by f.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RationalMatrix::Echelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;  // pivot_columns[i] is row i's pivot
};

}  // namespace percert

#endif  // PERCERT_RATIONAL_MATRIX_HPP
