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

#include "noneven/exact_linalg.hpp"

#include <gtest/gtest.h>

#include <random>

#include "noneven/errors.hpp"
#include "noneven/r10.hpp"
#include "support.hpp"

namespace noneven {
namespace {

TUMatrix triangle_incidence() {
  return TUMatrix::from_rows({{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}});
}

// sum_j k[j] * column j of m is zero.
bool in_kernel(const TUMatrix& m, const std::vector<int>& k) {
  for (int r = 0; r < m.rows(); ++r) {
    int s = 0;
    for (int c = 0; c < m.cols(); ++c) s += m.at(r, c) * k[c];
    if (s != 0) return false;
  }
  return true;
}

TEST(TUMatrixTest, RejectsEntriesOutsideUnitRange) {
  EXPECT_THROW(TUMatrix::from_rows({{2, 0}}), PreconditionError);
  EXPECT_THROW(TUMatrix::from_rows({{1, 0}, {1}}), PreconditionError);
}

TEST(RankTest, Examples) {
  EXPECT_EQ(rank(TUMatrix::identity(3)), 3);
  EXPECT_EQ(rank(triangle_incidence()), 2);
  EXPECT_EQ(rank(TUMatrix(2, 4)), 0);
}

TEST(RankTest, IntegerMatrixBeyondUnitEntries) {
  EXPECT_EQ(rank(IntMatrix::from_rows({{2, 4}, {1, 2}})), 1);
  EXPECT_EQ(rank(IntMatrix::from_rows({{3, 1}, {1, 2}})), 2);
}

TEST(RankTest, ColumnSubsets) {
  const TUMatrix m = triangle_incidence();
  EXPECT_EQ(rank_of_columns(m, ElementSet{0, 1}), 2);
  EXPECT_EQ(rank_of_columns(m, ElementSet{2}), 1);
  EXPECT_EQ(rank_of_columns(m, ElementSet{}), 0);
}

TEST(DeterminantTest, SmallCases) {
  EXPECT_EQ(determinant(IntMatrix::from_rows({{1, 1}, {-1, 1}})), 2);
  EXPECT_EQ(determinant(IntMatrix::from_rows({{0, 1}, {1, 0}})), -1);
  // Large entries exercise the multiprecision fallback.
  const std::int64_t big = std::int64_t{1} << 40;
  EXPECT_EQ(determinant(IntMatrix::from_rows({{big, 1}, {1, big}})),
            mpz_class(big) * big - 1);
}

TEST(KernelBasisTest, DirectedTriangle) {
  const TUMatrix k = kernel_basis(triangle_incidence());
  ASSERT_EQ(k.rows(), 1);
  EXPECT_EQ(k.column(0), std::vector<int>{1});
  EXPECT_EQ(k.at(0, 1), 1);
  EXPECT_EQ(k.at(0, 2), 1);
}

TEST(KernelBasisTest, IdentityHasEmptyKernel) {
  EXPECT_EQ(kernel_basis(TUMatrix::identity(4)).rows(), 0);
}

TEST(KernelBasisTest, ParallelColumns) {
  const TUMatrix k = kernel_basis(TUMatrix::from_rows({{1, 1}, {0, 0}}));
  ASSERT_EQ(k.rows(), 1);
  EXPECT_EQ(k.at(0, 0), 1);
  EXPECT_EQ(k.at(0, 1), -1);
}

TEST(KernelBasisTest, RejectsNonUnimodularInput) {
  EXPECT_THROW(kernel_basis(TUMatrix::from_rows({{1, 1, 0}, {-1, 1, 1}})),
               NotTotallyUnimodular);
}

TEST(KernelBasisTest, RandomTuMatricesGiveTuKernelOfRightDimension) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const TUMatrix a = testing::random_tu_matrix(rng, 4, 7);
    const TUMatrix k = kernel_basis(a);
    EXPECT_EQ(k.rows(), a.cols() - rank(a));
    EXPECT_EQ(rank(k), k.rows());
    for (int r = 0; r < k.rows(); ++r) {
      std::vector<int> row(a.cols());
      for (int c = 0; c < a.cols(); ++c) row[c] = k.at(r, c);
      EXPECT_TRUE(in_kernel(a, row));
    }
    if (k.rows() > 0) {
      EXPECT_FALSE(check_tu(k.to_int(), std::min(k.rows(), k.cols())).refuted());
    }
  }
}

TEST(CheckTuTest, R10VerifiedAtOrderFive) {
  const TuVerdict v = check_tu(r10_reference().rep().to_int(), 5);
  EXPECT_EQ(v.kind, TuVerdict::Kind::kVerified);
}

TEST(CheckTuTest, RefutationCarriesWitness) {
  const TuVerdict v = check_tu(IntMatrix::from_rows({{1, 1}, {-1, 1}}), 2);
  ASSERT_TRUE(v.refuted());
  EXPECT_EQ(v.witness_rows, (std::vector<int>{0, 1}));
  EXPECT_EQ(v.witness_cols, (std::vector<int>{0, 1}));
  EXPECT_EQ(v.witness_determinant, 2);
}

TEST(CheckTuTest, OrderZeroChecksNothing) {
  const TuVerdict v = check_tu(IntMatrix::from_rows({{1, 1}, {-1, 1}}), 0);
  EXPECT_EQ(v.kind, TuVerdict::Kind::kUncheckedAboveOrder);
}

TEST(CheckTuTest, EntryOutsideRangeIsOrderOneWitness) {
  const TuVerdict v = check_tu(IntMatrix::from_rows({{0, 2}}), 3);
  ASSERT_TRUE(v.refuted());
  EXPECT_EQ(v.witness_cols, std::vector<int>{1});
}

TEST(Gf2Test, IdentitySolveReturnsRightSide) {
  GF2Matrix a(4);
  for (int i = 0; i < 4; ++i) a.add_row(ElementSet{i});
  const GF2Vector b = to_gf2(ElementSet{1, 3}, 4);
  const auto x = gf2_solve(a, b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
}

TEST(Gf2Test, FirstPivotTieBreak) {
  GF2Matrix a(2);
  a.add_row(ElementSet{0, 1});
  GF2Vector b(1);
  b.set(0);
  const auto x = gf2_solve(a, b);
  ASSERT_TRUE(x);
  EXPECT_EQ(from_gf2(*x), (ElementSet{0}));
}

TEST(Gf2Test, InconsistentSystem) {
  GF2Matrix a(2);
  a.add_row(ElementSet{0, 1});
  a.add_row(ElementSet{0, 1});
  GF2Vector b(2);
  b.set(0);
  EXPECT_FALSE(gf2_solve(a, b));
}

TEST(Gf2Test, BicycleFourBasisHasOddCover) {
  // Three digons and one directed 4-cycle of the bicycle on 4 vertices.
  const Digraph d = build_bicycle(4);
  GF2Matrix a(d.num_edges());
  const std::vector<ElementSet> basis = {
      ElementSet{0, 1}, ElementSet{2, 3}, ElementSet{4, 5}, ElementSet{0, 2, 4, 6}};
  for (ElementSet c : basis) a.add_row(c);
  GF2Vector ones(basis.size());
  ones.set();
  const auto x = gf2_solve(a, ones);
  ASSERT_TRUE(x);
  // Oracle: scan all 2^8 subsets for one with odd intersections.
  bool exists = false;
  for (std::uint64_t j = 0; j < 256; ++j) {
    bool ok = true;
    for (ElementSet c : basis) ok &= (c & ElementSet(j)).size() % 2 == 1;
    exists |= ok;
  }
  EXPECT_TRUE(exists);
  for (ElementSet c : basis) EXPECT_EQ((c & from_gf2(*x)).size() % 2, 1);
}

TEST(Gf2Test, RandomSolutionsSatisfySystem) {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution bit(0.5);
  for (int trial = 0; trial < 300; ++trial) {
    GF2Matrix a(6);
    GF2Vector b(5);
    for (int r = 0; r < 5; ++r) {
      GF2Vector row(6);
      for (int c = 0; c < 6; ++c) row[c] = bit(rng);
      a.add_row(row);
      b[r] = bit(rng);
    }
    const auto x = gf2_solve(a, b);
    bool brute = false;
    for (std::uint64_t v = 0; v < 64; ++v) {
      bool ok = true;
      for (int r = 0; r < 5; ++r) {
        ok &= ((a.rows[r] & to_gf2(ElementSet(v), 6)).count() % 2 == 1) == b[r];
      }
      brute |= ok;
    }
    ASSERT_EQ(x.has_value(), brute);
    if (x) {
      for (int r = 0; r < 5; ++r) {
        EXPECT_EQ((a.rows[r] & *x).count() % 2 == 1, b[r]);
      }
    }
  }
}

TEST(Gf2Test, LeftKernelVectorsAnnihilateRows) {
  GF2Matrix a(3);
  a.add_row(ElementSet{0, 1});
  a.add_row(ElementSet{1, 2});
  a.add_row(ElementSet{0, 2});
  a.add_row(ElementSet{0});
  const auto kernel = gf2_left_kernel(a);
  EXPECT_EQ(int(kernel.size()), 4 - gf2_rank(a));
  for (const auto& y : kernel) {
    GF2Vector sum(3);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      if (y[i]) sum ^= a.rows[i];
    }
    EXPECT_TRUE(sum.none());
  }
}

TEST(Gf2Test, RationalAndBinaryRankAgreeOnTuMatrices) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const TUMatrix a = testing::random_tu_matrix(rng, 5, 6);
    GF2Matrix g(a.cols());
    for (int r = 0; r < a.rows(); ++r) {
      ElementSet row;
      for (int c = 0; c < a.cols(); ++c) {
        if (a.at(r, c) != 0) row.insert(c);
      }
      g.add_row(row);
    }
    EXPECT_EQ(rank(a), gf2_rank(g));
  }
}

TEST(PivotTest, UnitColumnUnchanged) {
  const TUMatrix m = TUMatrix::from_rows({{1, 1}, {0, -1}});
  EXPECT_EQ(pivot_unit_column(m, 0), m);
}

TEST(PivotTest, SwapAndNegate) {
  EXPECT_EQ(pivot_unit_column(TUMatrix::from_rows({{0}, {-1}}), 0),
            TUMatrix::from_rows({{1}, {0}}));
}

TEST(PivotTest, ZeroColumnRejected) {
  EXPECT_THROW(pivot_unit_column(TUMatrix::from_rows({{0, 1}}), 0), PreconditionError);
}

TEST(PivotTest, TriangleContractionIsParallelPair) {
  const TUMatrix p = pivot_unit_column(triangle_incidence(), 0).without_row(0);
  const auto circuits = enumerate_circuits(p.select_columns(ElementSet{1, 2}));
  ASSERT_EQ(circuits.size(), 1U);
  EXPECT_EQ(circuits[0].support(), (ElementSet{0, 1}));
  EXPECT_TRUE(circuits[0].is_directed());
}

TEST(PivotTest, PreservesSignedCircuits) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const TUMatrix a = testing::random_tu_matrix(rng, 4, 8);
    for (int c = 0; c < a.cols(); ++c) {
      if (a.column_is_zero(c)) continue;
      const TUMatrix p = pivot_unit_column(a, c);
      EXPECT_EQ(enumerate_circuits(p), enumerate_circuits(a));
      EXPECT_EQ(p.at(0, c), 1);
      for (int r = 1; r < p.rows(); ++r) EXPECT_EQ(p.at(r, c), 0);
    }
  }
}

TEST(ConicalTest, ZeroTarget) {
  const auto x = conical_feasibility({{1, 0}, {0, 1}}, {0, 0});
  ASSERT_TRUE(x);
  for (const auto& v : *x) EXPECT_EQ(v, 0);
}

TEST(ConicalTest, OneDimensional) {
  const auto x = conical_feasibility({{1}}, {1});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 1);
  EXPECT_FALSE(conical_feasibility({{1}}, {-1}));
}

TEST(ConicalTest, TriangleColumns) {
  const TUMatrix t = triangle_incidence();
  std::vector<int> target = t.column(0);
  for (int& v : target) v = -v;
  const auto x = conical_feasibility({t.column(1), t.column(2)}, target);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 1);
  EXPECT_EQ((*x)[1], 1);
}

TEST(ConicalTest, CoefficientsReproduceTarget) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> entry(-1, 1);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::vector<int>> cols(5, std::vector<int>(3));
    std::vector<int> target(3);
    for (auto& c : cols) for (int& v : c) v = entry(rng);
    for (int& v : target) v = entry(rng);
    const auto x = conical_feasibility(cols, target);
    if (!x) continue;
    ++feasible;
    for (int r = 0; r < 3; ++r) {
      Rational s = 0;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        EXPECT_GE((*x)[j], 0);
        s += (*x)[j] * cols[j][r];
      }
      EXPECT_EQ(s, target[r]);
    }
  }
  EXPECT_GT(feasible, 0);
}

}  // namespace
}  // namespace noneven
