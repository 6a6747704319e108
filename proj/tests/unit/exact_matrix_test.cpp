// Copyright 2026 The Authors.
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

#include "lagmap/exact_matrix.hpp"

#include <gtest/gtest.h>

#include <random>

#include "lagmap/error.hpp"
#include "oracles.hpp"

namespace lagmap {
namespace {

using testing::RationalRows;

RationalRows RowsOf(const ExactMatrix& m) {
  RationalRows rows(m.rows(), std::vector<mpq_class>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
  }
  return rows;
}

ExactMatrix RandomMatrix(std::mt19937& rng, Field field) {
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::bernoulli_distribution sparse(0.4);
  const int rows = dim(rng);
  const int cols = dim(rng);
  ExactMatrix m(rows, cols, field);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m.set(r, c, sparse(rng) ? 0 : entry(rng));
  }
  // Occasionally duplicate a row so rank deficiency is common.
  if (rows > 1 && sparse(rng)) {
    for (int c = 0; c < cols; ++c) m.set(rows - 1, c, m.at(0, c) * 2);
  }
  return m;
}

TEST(RankTest, Examples) {
  EXPECT_EQ(Rank(ExactMatrix::Identity(3)), 3);
  EXPECT_EQ(Rank(ExactMatrix(2, 4)), 0);
  EXPECT_EQ(Rank(ExactMatrix::FromIntegers({{0, 1, 1, 0}, {-1, 0, 0, 1}})), 2);
  EXPECT_EQ(Rank(ExactMatrix::FromIntegers({{2, 4}, {1, 2}})), 1);
  EXPECT_EQ(Rank(ExactMatrix::FromIntegers({{1, 1}, {1, -1}}, Field::kGf2)), 1);
}

TEST(RrefTest, Examples) {
  EXPECT_EQ(Rref(ExactMatrix::FromIntegers({{2, 4}, {1, 2}})),
            ExactMatrix::FromIntegers({{1, 2}, {0, 0}}));
  EXPECT_EQ(Rref(ExactMatrix::Identity(3)), ExactMatrix::Identity(3));
  EXPECT_EQ(Rref(ExactMatrix::FromIntegers({{0, 1, 1, 0}, {-1, 0, 0, 1}})),
            ExactMatrix::FromIntegers({{1, 0, 0, -1}, {0, 1, 1, 0}}));
}

TEST(RrefTest, FractionsStayExact) {
  const ExactMatrix m = ExactMatrix::FromIntegers({{3, 1}, {1, 3}, {2, 5}});
  const ExactMatrix r = Rref(m.transpose());
  EXPECT_EQ(r.at(0, 2), mpq_class(1, 8));
  EXPECT_EQ(r.at(1, 2), mpq_class(13, 8));
}

TEST(RrefTest, LargeEntriesDoNotOverflow) {
  ExactMatrix m(3, 3);
  const mpq_class big("123456789012345678901234567890");
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m.set(r, c, big * (r == c ? 2 : 1) + r * 7 + c);
  }
  const RationalRows naive = testing::NaiveRref(RowsOf(m));
  EXPECT_EQ(Rank(m), static_cast<int>(naive.size()));
  EXPECT_EQ(RowsOf(Rref(m).without_zero_rows()), naive);
}

TEST(RrefTest, MatchesNaiveOracleOnRandomMatrices) {
  std::mt19937 rng(20261014);
  for (int trial = 0; trial < 400; ++trial) {
    const ExactMatrix m = RandomMatrix(rng, Field::kRationals);
    const RationalRows naive = testing::NaiveRref(RowsOf(m));
    const ExactMatrix r = Rref(m);
    EXPECT_EQ(RowsOf(r.without_zero_rows()), naive) << WriteMatrix(m);
    EXPECT_EQ(Rank(m), static_cast<int>(naive.size()));
  }
}

TEST(RankTest, PropertiesOnRandomMatrices) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    for (Field field : {Field::kRationals, Field::kGf2}) {
      const ExactMatrix m = RandomMatrix(rng, field);
      const ExactMatrix r = Rref(m);
      EXPECT_EQ(Rank(m), Rank(r));
      EXPECT_EQ(Rank(m), Rank(m.transpose()));
      EXPECT_EQ(Rref(r), r);
      EXPECT_TRUE(RowSpaceEqual(m, r));
    }
    const ExactMatrix q = RandomMatrix(rng, Field::kRationals);
    EXPECT_LE(Rank(q.mod2()), Rank(q));
  }
}

TEST(ColumnsIndependentTest, Examples) {
  const ExactMatrix torus = ExactMatrix::FromIntegers({{0, 1, 1, 0}, {-1, 0, 0, 1}});
  EXPECT_TRUE(ColumnsIndependent(torus, std::vector<int>{}));
  EXPECT_TRUE(ColumnsIndependent(torus, std::vector<int>{0, 1}));
  EXPECT_FALSE(ColumnsIndependent(torus, std::vector<int>{0, 3}));
  for (int c = 0; c < 3; ++c) {
    EXPECT_TRUE(ColumnsIndependent(ExactMatrix::Identity(3), std::vector<int>{c}));
  }
}

TEST(ColumnsIndependentTest, AgreesWithDeterminantOracle) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const ExactMatrix m = RandomMatrix(rng, Field::kRationals);
    for (int mask = 0; mask < (1 << m.cols()); ++mask) {
      std::vector<int> cols;
      for (int c = 0; c < m.cols(); ++c) {
        if ((mask >> c) & 1) cols.push_back(c);
      }
      const bool independent = ColumnsIndependent(m, cols);
      EXPECT_EQ(independent, Rank(m.select_columns(cols)) == static_cast<int>(cols.size()));
      if (static_cast<int>(cols.size()) == m.rows()) {
        EXPECT_EQ(independent,
                  testing::LeibnizDeterminant(RowsOf(m.select_columns(cols))) != 0);
      }
    }
  }
}

TEST(SkewSymmetricTest, Examples) {
  EXPECT_TRUE(IsSkewSymmetric(ExactMatrix::FromIntegers({{0, 1}, {-1, 0}})));
  EXPECT_FALSE(IsSkewSymmetric(ExactMatrix::FromIntegers({{1, 0}, {0, 0}})));
  EXPECT_FALSE(IsSkewSymmetric(ExactMatrix::FromIntegers({{0, 1}, {1, 0}})));
  EXPECT_TRUE(IsSkewSymmetric(ExactMatrix::FromIntegers({{0, 1}, {1, 0}}, Field::kGf2)));
  EXPECT_THROW(IsSkewSymmetric(ExactMatrix(2, 3)), InvalidArgument);
  const ExactMatrix a = ExactMatrix::FromIntegers({{0, 1}, {-1, 0}});
  EXPECT_TRUE(IsSkewSymmetric(a * ExactMatrix::Identity(2).transpose()));
}

TEST(RowSpaceEqualTest, Examples) {
  const ExactMatrix a = ExactMatrix::FromIntegers({{0, 1, 1, 0}, {-1, 0, 0, 1}});
  const ExactMatrix swapped = ExactMatrix::FromIntegers({{-1, 0, 0, 1}, {0, 1, 1, 0}});
  EXPECT_TRUE(RowSpaceEqual(a, swapped));
  EXPECT_TRUE(RowSpaceEqual(a, a.scaled(2)));
  EXPECT_TRUE(RowSpaceEqual(a, Rref(a)));
  EXPECT_FALSE(RowSpaceEqual(a, ExactMatrix::FromIntegers({{1, 0, 0, 0}, {0, 1, 0, 0}})));
  EXPECT_FALSE(RowSpaceEqual(a, ExactMatrix::FromIntegers({{1, 0, 0, -1}})));
  EXPECT_THROW(RowSpaceEqual(a, a.mod2()), InvalidArgument);
}

TEST(MatrixTest, ArithmeticAndShape) {
  const ExactMatrix a = ExactMatrix::FromIntegers({{1, 2}, {3, 4}});
  EXPECT_EQ(a * ExactMatrix::Identity(2), a);
  EXPECT_EQ(a * a, ExactMatrix::FromIntegers({{7, 10}, {15, 22}}));
  EXPECT_EQ(HorizontalConcat(a, a).cols(), 4);
  EXPECT_EQ(HorizontalConcat(a, a).column_block(2, 2), a);
  EXPECT_EQ(a.mod2(), ExactMatrix::FromIntegers({{1, 0}, {1, 0}}, Field::kGf2));
  EXPECT_THROW(a * ExactMatrix(3, 1), InvalidArgument);
  ExactMatrix g(1, 1, Field::kGf2);
  EXPECT_THROW(g.set(0, 0, mpq_class(1, 2)), InvalidArgument);
}

TEST(MatrixTextTest, RoundTrip) {
  ExactMatrix m(2, 3);
  m.set(0, 0, mpq_class(-1, 2));
  m.set(1, 2, 5);
  const std::string text = WriteMatrix(m);
  EXPECT_EQ(text, "2 3 q\n-1/2 0 0\n0 0 5\n");
  EXPECT_EQ(ParseMatrix(text), m);
  EXPECT_EQ(ParseMatrix("# c\n1 2 f2\n1 3\n"),
            ExactMatrix::FromIntegers({{1, 1}}, Field::kGf2));
  EXPECT_THROW(ParseMatrix("2 2 q\n1 0\n"), Error);
  EXPECT_THROW(ParseMatrix("1 1 r\n1\n"), Error);
}

}  // namespace
}  // namespace lagmap
