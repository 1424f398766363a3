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

#include "mixedgraph/gmatrix.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mixedgraph {

GMatrix::GMatrix(std::initializer_list<std::initializer_list<GaussianInt>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("GMatrix: ragged row list");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

GMatrix GMatrix::identity(std::size_t n) {
  GMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

GMatrix GMatrix::conj_transpose() const {
  GMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
  return t;
}

bool GMatrix::is_hermitian() const { return is_square() && *this == conj_transpose(); }

GMatrix operator+(const GMatrix& a, const GMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("GMatrix +: shape mismatch");
  GMatrix s = a;
  for (std::size_t k = 0; k < s.data_.size(); ++k) s.data_[k] += b.data_[k];
  return s;
}

GMatrix operator-(const GMatrix& a, const GMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("GMatrix -: shape mismatch");
  GMatrix s = a;
  for (std::size_t k = 0; k < s.data_.size(); ++k) s.data_[k] -= b.data_[k];
  return s;
}

GMatrix operator*(const GMatrix& a, const GMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("GMatrix *: shape mismatch");
  GMatrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianInt& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (!b(k, c).is_zero()) p(r, c) += x * b(k, c);
      }
    }
  }
  return p;
}

namespace {

void check_indices(std::span<const std::size_t> idx, std::size_t bound, const char* what) {
  std::vector<bool> seen(bound, false);
  for (std::size_t k : idx) {
    if (k >= bound) throw std::out_of_range(std::string("submatrix: ") + what + " index out of range");
    if (seen[k]) throw std::invalid_argument(std::string("submatrix: duplicated ") + what + " index");
    seen[k] = true;
  }
}

}  // namespace

GMatrix submatrix(const GMatrix& m, std::span<const std::size_t> rows,
                  std::span<const std::size_t> cols) {
  check_indices(rows, m.rows(), "row");
  check_indices(cols, m.cols(), "column");
  GMatrix s(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) s(r, c) = m(rows[r], cols[c]);
  return s;
}

GMatrix delete_row_col(const GMatrix& m, std::size_t r, std::size_t c) {
  if (r >= m.rows() || c >= m.cols()) throw std::out_of_range("delete_row_col: index out of range");
  std::vector<std::size_t> rows, cols;
  for (std::size_t k = 0; k < m.rows(); ++k)
    if (k != r) rows.push_back(k);
  for (std::size_t k = 0; k < m.cols(); ++k)
    if (k != c) cols.push_back(k);
  return submatrix(m, rows, cols);
}

GaussianInt determinant(const GMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  GMatrix a = m;
  GaussianInt prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(a(p, c), a(k, c));
      negate = !negate;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        GaussianInt v = a(r, c) * a(k, k) - a(r, k) * a(k, c);
        a(r, c) = prev == GaussianInt{1} ? std::move(v) : v.exact_div(prev);
      }
      a(r, k) = 0;
    }
    prev = a(k, k);
  }
  GaussianInt d = a(n - 1, n - 1);
  return negate ? -d : d;
}

GaussianInt determinant_by_permutations(const GMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  GaussianInt total = 0;
  do {
    // parity by counting inversions
    std::size_t inversions = 0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (perm[x] > perm[y]) ++inversions;
    GaussianInt term = 1;
    for (std::size_t r = 0; r < n && !term.is_zero(); ++r) term *= m(r, perm[r]);
    if (inversions % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

GMatrix mul_conj_transpose(const GMatrix& m) { return m * m.conj_transpose(); }

namespace {

nlohmann::ordered_json part_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

}  // namespace

nlohmann::ordered_json to_json(const GaussianInt& z) {
  return nlohmann::ordered_json::array({part_to_json(z.re()), part_to_json(z.im())});
}

nlohmann::ordered_json to_json(const GMatrix& m) {
  nlohmann::ordered_json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  return out;
}

std::string to_text(const GMatrix& m) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r * m.cols() + c] = m(r, c).to_string();
      width = std::max(width, cells[r * m.cols() + c].size());
    }
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string& s = cells[r * m.cols() + c];
      if (c > 0) os << ' ';
      os << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace mixedgraph
