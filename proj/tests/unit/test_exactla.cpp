// Copyright 2026 The braided-forge Authors
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

#include <gtest/gtest.h>

#include <atomic>
#include <random>

#include "braided/error.hpp"
#include "braided/matrix.hpp"
#include "braided/parallel.hpp"
#include "oracles.hpp"

using namespace braided;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F7 = FieldSpec::prime(7);
const FieldSpec F3 = FieldSpec::prime(3);

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::invalid_argument;
}

}  // namespace

TEST(Scalar, CanonicalRationalStrings) {
  EXPECT_EQ(Scalar::parse(Q, "-6/4").to_string(), "-3/2");
  // Denominators are written positive.
  EXPECT_THROW(Scalar::parse(Q, "6/-4"), Error);
  EXPECT_EQ(Scalar::parse(Q, "10/5").to_string(), "2");
  EXPECT_EQ(Scalar::parse(Q, "-0").to_string(), "0");
  EXPECT_EQ((Scalar::parse(Q, "1/2") + Scalar::parse(Q, "1/3")).to_string(), "5/6");
}

TEST(Scalar, PrimeResidues) {
  EXPECT_EQ(Scalar::parse(F7, "-1").to_string(), "6");
  EXPECT_EQ(Scalar::parse(F7, "1/2").to_string(), "4");
  EXPECT_EQ((Scalar(F7, 3) * Scalar(F7, 5)).to_string(), "1");
  EXPECT_EQ(Scalar(F7, 3).inverse().to_string(), "5");
}

TEST(Scalar, Errors) {
  EXPECT_EQ(code_of([] { Scalar(Q, 1) / Scalar(Q, 0); }), Errc::division_by_zero);
  EXPECT_EQ(code_of([] { scalar_arith(Scalar(Q, 1), Scalar(F7, 1), ArithOp::add); }), Errc::field_mismatch);
  EXPECT_EQ(code_of([] { Scalar::parse(Q, "1/0"); }), Errc::division_by_zero);
  EXPECT_EQ(code_of([] { Scalar::parse(Q, "x"); }), Errc::malformed_input);
  EXPECT_EQ(code_of([] { FieldSpec::prime(8); }), Errc::invalid_argument);
  EXPECT_EQ(parse_field("GF(7)"), F7);
  EXPECT_EQ(parse_field("Q"), Q);
}

TEST(Matrix, KroneckerMatchesEntryFormula) {
  std::mt19937_64 rng(1);
  const Matrix a = oracle::random_matrix(Q, 2, 3, rng), b = oracle::random_matrix(Q, 3, 2, rng);
  const Matrix k = kronecker(a, b);
  ASSERT_EQ(k.rows(), 6u);
  ASSERT_EQ(k.cols(), 6u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t s = 0; s < 2; ++s) EXPECT_EQ(k.at(i * 3 + r, j * 2 + s), a.at(i, j) * b.at(r, s));
}

TEST(Matrix, MixedProductProperty) {
  std::mt19937_64 rng(2);
  for (FieldSpec f : {Q, F7}) {
    const Matrix a = oracle::random_matrix(f, 2, 3, rng), c = oracle::random_matrix(f, 3, 2, rng);
    const Matrix b = oracle::random_matrix(f, 2, 2, rng), d = oracle::random_matrix(f, 2, 3, rng);
    EXPECT_EQ(kronecker(a, b) * kronecker(c, d), kronecker(a * c, b * d));
  }
}

TEST(Matrix, FlipSwapsFactors) {
  std::mt19937_64 rng(3);
  const Matrix x = oracle::random_matrix(Q, 2, 1, rng), y = oracle::random_matrix(Q, 3, 1, rng);
  EXPECT_EQ(Matrix::flip(Q, 2, 3) * kronecker(x, y), kronecker(y, x));
}

TEST(Matrix, RankAgreesWithMinorOracle) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const FieldSpec f = trial % 2 ? Q : F7;
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    Matrix m = oracle::random_matrix(f, r, c, rng, -2, 2);
    if (trial % 3 == 0 && r > 1) {
      // Force a dependent row.
      for (std::size_t j = 0; j < c; ++j) m.set(r - 1, j, m.at(0, j) * Scalar(f, 3));
    }
    EXPECT_EQ(rank(m), oracle::minor_rank(m)) << m.to_string();
  }
}

TEST(Matrix, KernelSizeAgreesWithEnumerationOverGF3) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 1 + rng() % 3, c = 1 + rng() % 4;
    const Matrix m = oracle::random_matrix(F3, r, c, rng, 0, 2);
    const Matrix k = kernel_basis(m);
    EXPECT_EQ(oracle::ipow(3, k.cols()), oracle::brute_force_kernel_size(m));
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(rank(k), k.cols());
  }
}

TEST(Matrix, RrefIsReducedAndPivotsMatchRank) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = oracle::random_matrix(Q, 4, 5, rng, -3, 3);
    const RrefResult r = rref(m);
    ASSERT_EQ(r.pivots.size(), rank(m));
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      for (std::size_t k = 0; k < r.reduced.rows(); ++k) {
        EXPECT_EQ(r.reduced.at(k, r.pivots[i]), Scalar(Q, k == i ? 1 : 0));
      }
    }
  }
}

TEST(Matrix, InverseAndDeterminant) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const FieldSpec f = trial % 2 ? Q : F7;
    const Matrix m = oracle::random_matrix(f, 3, 3, rng);
    if (oracle::leibniz_det(m).is_zero()) {
      EXPECT_EQ(code_of([&] { inverse(m); }), Errc::not_invertible);
    } else {
      EXPECT_TRUE((inverse(m) * m).is_identity());
    }
  }
  EXPECT_EQ(code_of([] { inverse(Matrix(Q, 2, 3)); }), Errc::not_invertible);
}

TEST(Matrix, SolveAndColumnSpaces) {
  std::mt19937_64 rng(8);
  const Matrix a = oracle::random_matrix(Q, 4, 2, rng);
  const Matrix x = oracle::random_matrix(Q, 2, 3, rng);
  EXPECT_EQ(a * solve(a, a * x), a * x);
  EXPECT_TRUE(column_space_contains(a, a * x));
  EXPECT_TRUE(same_column_space(a, hstack(a, a * x)));
  const Matrix e = Matrix::unit_vector(Q, 4, 0);
  if (!column_space_contains(a, e)) {
    EXPECT_FALSE(try_solve(a, e).has_value());
    EXPECT_EQ(code_of([&] { solve(a, e); }), Errc::invalid_argument);
  }
}

TEST(Matrix, QuotientProjectionAndSection) {
  std::mt19937_64 rng(9);
  const Matrix sub = oracle::random_matrix(F7, 5, 2, rng, 1, 6);
  ASSERT_EQ(rank(sub), 2u);
  const Quotient qt = quotient_by(sub, 5);
  EXPECT_TRUE((qt.projection * sub).is_zero());
  EXPECT_TRUE((qt.projection * qt.section).is_identity());
  EXPECT_EQ(qt.projection.rows(), 3u);
  EXPECT_EQ(code_of([&] { quotient_by(hstack(sub, sub), 5); }), Errc::basis_not_independent);
}

TEST(Matrix, StringRoundTrip) {
  const Matrix m = Matrix::from_strings(Q, {{"1/2", "-3"}, {"0", "4/6"}});
  EXPECT_EQ(Matrix::from_strings(Q, m.to_strings()), m);
  EXPECT_EQ(m.to_strings()[1][1], "2/3");
  EXPECT_EQ(code_of([] { Matrix::from_strings(Q, {{"1", "2"}, {"3"}}); }), Errc::shape_mismatch);
}

TEST(Parallel, EveryIndexRunsOnceAndErrorsPropagate) {
  parallel::set_thread_cap(4);
  std::vector<std::atomic<int>> hits(100);
  parallel::for_each_index(100, [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_THROW(parallel::for_each_index(10, [](std::size_t i) {
                 if (i == 7) throw Error(Errc::invalid_argument, "boom");
               }),
               Error);
  parallel::set_thread_cap(1);
  EXPECT_EQ(parallel::thread_cap(), 1u);
}
