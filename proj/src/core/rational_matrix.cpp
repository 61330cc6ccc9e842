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

#include "percert/rational_matrix.hpp"

#include <utility>

#include "percert/error.hpp"

namespace percert {

namespace {

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

void RationalMatrix::append_row(const std::vector<Rational>& row) {
  if (rows_ == 0 && data_.empty()) cols_ = row.size();
  if (row.size() != cols_)
    throw Error(ErrorCode::internal, "witness-space", "row length does not match matrix width");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RationalMatrix::Echelon RationalMatrix::rref() const {
  Echelon out{*this, {}};
  RationalMatrix& m = out.reduced;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
    std::size_t best = rows_;
    for (std::size_t r = lead; r < rows_; ++r) {
      if (m(r, col) == 0) continue;
      if (best == rows_ || bit_size(m(r, col)) < bit_size(m(best, col))) best = r;
    }
    if (best == rows_) continue;
    if (best != lead)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m(best, c), m(lead, c));
    const Rational inv = 1 / m(lead, col);
    for (std::size_t c = col; c < cols_; ++c) m(lead, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < cols_; ++c) m(r, c) -= factor * m(lead, c);
    }
    out.pivot_columns.push_back(col);
    ++lead;
  }
  return out;
}

std::size_t RationalMatrix::rank() const { return rref().pivot_columns.size(); }

std::vector<std::vector<Rational>> RationalMatrix::nullspace() const {
  const Echelon e = rref();
  std::vector<char> is_pivot(cols_, 0);
  for (auto c : e.pivot_columns) is_pivot[c] = 1;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols_);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) v[e.pivot_columns[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace percert
