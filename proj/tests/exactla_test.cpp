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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ckskit/ckskit.hpp"
#include "oracles.hpp"

namespace ckskit {
namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t m, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
  }
  return a;
}

std::vector<std::vector<mpz_class>> rows_of(const IntMatrix& a) {
  std::vector<std::vector<mpz_class>> out(a.rows(), std::vector<mpz_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j);
  }
  return out;
}

TEST(Smith, KnownForms) {
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(3)).D, IntMatrix::identity(3));
  auto a = smith_normal_form(IntMatrix::from_rows({{1, 2}, {3, 4}}));
  EXPECT_EQ(a.D, IntMatrix::from_rows({{1, 0}, {0, 2}}));
  auto b = smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}}));
  EXPECT_EQ(b.D, IntMatrix::from_rows({{2, 0}, {0, 4}}));
}

TEST(Smith, DeterminantalDivisorsAgree) {
  // The two hand examples above, via gcds of minors.
  EXPECT_EQ(oracle::invariant_factors({{1, 2}, {3, 4}}), (std::vector<mpz_class>{1, 2}));
  EXPECT_EQ(oracle::invariant_factors({{2, 4}, {6, 8}}), (std::vector<mpz_class>{2, 4}));
}

TEST(Smith, TransformsAreUnimodularAndDiagonalize) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = 1 + trial % 4;
    std::size_t n = 1 + (trial / 4) % 4;
    IntMatrix a = random_matrix(rng, m, n, -3, 3);
    SmithForm<BigInt> s = smith_normal_form(a);
    EXPECT_EQ(s.U * a * s.V, s.D);
    EXPECT_EQ(abs(determinant(s.U)), 1);
    EXPECT_EQ(abs(determinant(s.V)), 1);
    std::vector<BigInt> f = s.invariant_factors();
    for (std::size_t i = 1; i < f.size(); ++i) EXPECT_EQ(f[i] % f[i - 1], 0);
    std::vector<mpz_class> expect = oracle::invariant_factors(rows_of(a));
    ASSERT_EQ(f.size(), expect.size());
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(abs(f[i]), expect[i]);
    EXPECT_EQ(rank(a), oracle::rank_q(oracle::to_rows(a)));
  }
}

TEST(Smith, MachineIntegerPath) {
  Matrix<long long> a = Matrix<long long>::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  std::vector<long long> f = invariant_factors(a);
  EXPECT_EQ(f, (std::vector<long long>{2, 6, 12}));
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 5;
    IntMatrix a = random_matrix(rng, n, n, -4, 4);
    EXPECT_EQ(determinant(a), oracle::det_cofactor(rows_of(a)));
  }
  EXPECT_THROW(determinant(IntMatrix(2, 3)), DimensionMismatch);
}

TEST(Cohomology, ZeroDifferentials) {
  CochainComplex c;
  c.dims = {2, 3};
  c.differentials = {IntMatrix(3, 2)};
  GradedCohomology h = cohomology(c);
  EXPECT_EQ(h.at(0).rank, 2u);
  EXPECT_EQ(h.at(1).rank, 3u);
  EXPECT_TRUE(h.torsion_free());
}

TEST(Cohomology, MultiplicationByTwo) {
  CochainComplex c;
  c.dims = {1, 1};
  c.differentials = {IntMatrix::from_rows({{2}})};
  GradedCohomology h = cohomology(c);
  EXPECT_EQ(h.at(0), DegreeCohomology{});
  EXPECT_EQ(h.at(1).rank, 0u);
  EXPECT_EQ(h.at(1).torsion, (std::vector<BigInt>{2}));
}

TEST(Cohomology, RejectsNonComplexAndBadShapes) {
  CochainComplex bad;
  bad.dims = {1, 1, 1};
  bad.differentials = {IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{1}})};
  EXPECT_THROW(cohomology(bad), NotAComplex);
  CochainComplex shape;
  shape.dims = {1, 2};
  shape.differentials = {IntMatrix(1, 1)};
  EXPECT_THROW(cohomology(shape), DimensionMismatch);
}

TEST(Cohomology, RandomComplexesMatchRankCount) {
  // C^0 -> C^1 -> C^2 with d1 d0 = 0 built as d1 = B, d0 = kernel columns.
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix d0 = random_matrix(rng, 3, 2, -2, 2);
    // d1 kills im d0: rows orthogonal to both columns of d0 (cross product).
    IntMatrix d1(1, 3);
    d1(0, 0) = d0(1, 0) * d0(2, 1) - d0(2, 0) * d0(1, 1);
    d1(0, 1) = d0(2, 0) * d0(0, 1) - d0(0, 0) * d0(2, 1);
    d1(0, 2) = d0(0, 0) * d0(1, 1) - d0(1, 0) * d0(0, 1);
    CochainComplex c;
    c.dims = {2, 3, 1};
    c.differentials = {d0, d1};
    GradedCohomology h = cohomology(c);
    std::size_t r0 = oracle::rank_q(oracle::to_rows(d0));
    std::size_t r1 = oracle::rank_q(oracle::to_rows(d1));
    EXPECT_EQ(h.at(0).rank, 2 - r0);
    EXPECT_EQ(h.at(1).rank, 3 - r0 - r1);
    EXPECT_EQ(h.at(2).rank, 1 - r1);
    // Torsion of H^1 is the torsion of coker d0 on ker d1; H^2 torsion is
    // coker of d1 in Z.
    std::vector<mpz_class> f1 = oracle::invariant_factors(rows_of(d1));
    std::vector<BigInt> t2;
    for (const auto& v : f1) {
      if (v > 1) t2.push_back(v);
    }
    EXPECT_EQ(h.at(2).torsion, t2);
  }
}

TEST(DirectSum, Lattices) {
  EXPECT_TRUE(verify_direct_sum(2, IntMatrix::from_rows({{1}, {1}}), IntMatrix::from_rows({{0}, {1}})));
  EXPECT_FALSE(verify_direct_sum(2, IntMatrix::from_rows({{2}, {0}}), IntMatrix::from_rows({{0}, {1}})));
  EXPECT_THROW(verify_direct_sum(3, IntMatrix(2, 1), IntMatrix(2, 1)), DimensionMismatch);
}

TEST(DirectSum, ThetaDegreeOne) {
  CoherentCotree c = coherent_cotree(theta_graph());
  HTComplex ht(c);
  HomotopyMaps m = maps_fgh(ht, ChoiceFunction::minimal(c));
  EXPECT_TRUE(verify_direct_sum(3, ht.differential(0, 1), m.g[1]));
}

TEST(Polynomials, Formatting) {
  Poly2 t = Poly2::x() + Poly2::y() + Poly2::y() * Poly2::y();
  EXPECT_EQ(t.to_string(), "x + y + y^2");
  EXPECT_EQ(loop_weight().to_string(), "-x - y - x*y");
  EXPECT_EQ(Poly2().to_string(), "0");
  EXPECT_EQ(t.at_x_one().to_string(), "1 + q + q^2");
  EXPECT_EQ(t.evaluate(1, 1), 3);
}

}  // namespace
}  // namespace ckskit
