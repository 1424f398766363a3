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
#include <numeric>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"

namespace mixedgraph {
namespace {

GMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  GMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = GaussianInt(d(rng), d(rng));
  return m;
}

int sign_of(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) s = -s;
  return s;
}

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(GMatrix()), GaussianInt(1));
  EXPECT_EQ(determinant(GMatrix{{GaussianInt(0, 1)}}), GaussianInt(0, 1));
  EXPECT_EQ(determinant(GMatrix{{2, 1}, {1, 1}}), GaussianInt(1));
  EXPECT_EQ(determinant(GMatrix{{2, GaussianInt(0, -1)}, {GaussianInt(0, 1), 2}}), GaussianInt(3));
  // needs a row swap: first pivot is zero
  EXPECT_EQ(determinant(GMatrix{{0, 1}, {1, 0}}), GaussianInt(-1));
  EXPECT_EQ(determinant(GMatrix{{1, 2}, {2, 4}}), GaussianInt(0));
  EXPECT_THROW(determinant(GMatrix(2, 3)), std::invalid_argument);
}

TEST(Determinant, EliminationAgreesWithPermutationExpansion) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 10000; ++k) {
    const std::size_t n = 1 + rng() % 5;
    // small range so singular matrices show up too
    const GMatrix m = random_matrix(rng, n, n, k % 2 ? 1 : 4);
    ASSERT_EQ(determinant(m), determinant_by_permutations(m)) << "case " << k;
  }
}

TEST(Determinant, GramDeterminantIsNonnegativeInteger) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 2000; ++k) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    const GaussianInt d = determinant(mul_conj_transpose(random_matrix(rng, r, c, 3)));
    ASSERT_TRUE(d.is_real());
    ASSERT_GE(d.re(), 0);
  }
}

TEST(Determinant, RowAndColumnPermutationsMultiplyBySign) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 1 + rng() % 5;
    const GMatrix m = random_matrix(rng, n, n, 5);
    std::vector<std::size_t> p(n), q(n);
    std::iota(p.begin(), p.end(), 0);
    std::iota(q.begin(), q.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::shuffle(q.begin(), q.end(), rng);
    const GaussianInt want = sign_of(p) * sign_of(q) == 1 ? determinant(m) : -determinant(m);
    ASSERT_EQ(determinant(submatrix(m, p, q)), want);
  }
}

TEST(Determinant, ConjugateTransposeConjugatesDeterminant) {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 1 + rng() % 5;
    const GMatrix m = random_matrix(rng, n, n, 5);
    ASSERT_EQ(determinant(m.conj_transpose()), determinant(m).conj());
  }
}

TEST(Determinant, ProductRule) {
  std::mt19937_64 rng(15);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + rng() % 4;
    const GMatrix a = random_matrix(rng, n, n, 3), b = random_matrix(rng, n, n, 3);
    ASSERT_EQ(determinant(a * b), determinant(a) * determinant(b));
  }
}

TEST(Determinant, LargeEntriesStayExact) {
  // Vandermonde on 1..8: prod (j - i)
  GMatrix v(8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    GaussianInt x = 1;
    for (std::size_t j = 0; j < 8; ++j) {
      v(i, j) = x;
      x *= GaussianInt(static_cast<std::int64_t>(i + 1), 1);
    }
  }
  GaussianInt want = 1;
  for (std::int64_t i = 1; i <= 8; ++i)
    for (std::int64_t j = i + 1; j <= 8; ++j) want *= GaussianInt(j - i);
  EXPECT_EQ(determinant(v), want);
}

TEST(GMatrix, SubmatrixAndDeletion) {
  const GMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  const std::vector<std::size_t> rows{2, 0}, cols{1};
  EXPECT_EQ(submatrix(m, rows, cols), (GMatrix{{8}, {2}}));
  EXPECT_EQ(delete_row_col(m, 1, 1), (GMatrix{{1, 3}, {7, 9}}));
  const std::vector<std::size_t> bad{3}, dup{0, 0};
  EXPECT_THROW(submatrix(m, bad, cols), std::out_of_range);
  EXPECT_THROW(submatrix(m, dup, cols), std::invalid_argument);
}

TEST(GMatrix, HermitianAndArithmetic) {
  const GMatrix h{{2, GaussianInt(0, 1)}, {GaussianInt(0, -1), 2}};
  EXPECT_TRUE(h.is_hermitian());
  EXPECT_FALSE((GMatrix{{0, GaussianInt(0, 1)}, {GaussianInt(0, 1), 0}}).is_hermitian());
  EXPECT_EQ(h + h - h, h);
  EXPECT_EQ(GMatrix::identity(2) * h, h);
  EXPECT_EQ(mul_conj_transpose(GMatrix{{1}, {GaussianInt(0, -1)}}), (GMatrix{{1, GaussianInt(0, 1)}, {GaussianInt(0, -1), 1}}));
}

TEST(GMatrix, JsonAndText) {
  const GMatrix q{{1, GaussianInt(0, 1)}, {GaussianInt(0, -1), 1}};
  EXPECT_EQ(to_json(q).dump(), R"({"rows":2,"cols":2,"entries":[[[1,0],[0,1]],[[0,-1],[1,0]]]})");
  EXPECT_EQ(to_json(GaussianInt(pow2(70), -1)).dump(), R"(["1180591620717411303424",-1])");
  EXPECT_EQ(to_text(GMatrix{{1, -2}, {GaussianInt(0, 1), 10}}), " 1 -2\n i 10\n");
}

}  // namespace
}  // namespace mixedgraph
