// Copyright 2026 The mixedgraph Authors
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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mixedgraph/gaussian.hpp"

namespace mixedgraph {

// Dense row-major matrix over Z[i].
class GMatrix {
 public:
  GMatrix() = default;
  GMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Row-list construction for tests and literals; all rows must have equal length.
  GMatrix(std::initializer_list<std::initializer_list<GaussianInt>> rows);

  static GMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussianInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  GMatrix conj_transpose() const;
  bool is_hermitian() const;

  friend GMatrix operator+(const GMatrix& a, const GMatrix& b);
  friend GMatrix operator-(const GMatrix& a, const GMatrix& b);
  friend GMatrix operator*(const GMatrix& a, const GMatrix& b);
  friend bool operator==(const GMatrix& a, const GMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianInt> data_;
};

// A[rows, cols] with entries copied in the given index order. Throws
// std::out_of_range / std::invalid_argument on bad or duplicated indices.
GMatrix submatrix(const GMatrix& m, std::span<const std::size_t> rows,
                  std::span<const std::size_t> cols);

// Matrix with row `r` and column `c` removed.
GMatrix delete_row_col(const GMatrix& m, std::size_t r, std::size_t c);

// Fraction-free (Bareiss) elimination over Z[i]. Every interior division is
// exact. The empty matrix has determinant 1. Throws std::invalid_argument
// when `m` is not square.
GaussianInt determinant(const GMatrix& m);

// Leibniz expansion over all n! permutations. Independent of the elimination
// path; intended for cross-checks at small sizes (n <= 8).
GaussianInt determinant_by_permutations(const GMatrix& m);

// M * M^*.
GMatrix mul_conj_transpose(const GMatrix& m);

// Gaussian integers serialize as [re, im]; parts outside the int64 range are
// emitted as decimal strings.
nlohmann::ordered_json to_json(const GaussianInt& z);
// {"rows":r,"cols":c,"entries":[[[re,im],...],...]}
nlohmann::ordered_json to_json(const GMatrix& m);

// Column-aligned text rendering, one row per line.
std::string to_text(const GMatrix& m);

}  // namespace mixedgraph
