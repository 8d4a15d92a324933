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

#include <random>

#include "braided/braided_space.hpp"
#include "braided/error.hpp"
#include "braided/permutation.hpp"
#include "oracles.hpp"

using namespace braided;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F7 = FieldSpec::prime(7);

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::invalid_argument;
}

Braiding a2() {
  return braiding_from_diagonal(Matrix::from_ints(F7, 2, 2, {2, 1, 4, 2}), BasedSpace::make(F7, 2));
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Permutations, ReducedWordsHaveInversionLength) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : all_permutations(n)) {
      const auto w = reduced_word(p);
      EXPECT_EQ(w.size(), inversion_count(p));
      EXPECT_EQ(permutation_from_word(n, w), p);
      EXPECT_EQ(compose(p, inverse(p)), identity_permutation(n));
    }
  }
}

TEST(Permutations, ShuffleCounts) {
  for (std::size_t a = 0; a <= 4; ++a) {
    for (std::size_t b = 0; b <= 4; ++b) {
      const auto s = shuffles(a, b);
      EXPECT_EQ(s.size(), binomial(a + b, a));
      for (const auto& p : s) {
        for (std::size_t i = 0; i + 1 < a; ++i) EXPECT_LT(p[i], p[i + 1]);
        for (std::size_t i = a; i + 1 < a + b; ++i) EXPECT_LT(p[i], p[i + 1]);
      }
    }
  }
}

TEST(Braiding, DiagonalEntries) {
  const Braiding b = a2();
  // c(x_i⊗x_j) = q_ij x_j⊗x_i.
  EXPECT_EQ(b.c().at(1 * 2 + 0, 0 * 2 + 1), Scalar(F7, 1));
  EXPECT_EQ(b.c().at(0 * 2 + 1, 1 * 2 + 0), Scalar(F7, 4));
  EXPECT_EQ(b.c().at(0, 0), Scalar(F7, 2));
  EXPECT_TRUE((b.c() * b.c_inv()).is_identity());
}

TEST(Braiding, ValidationErrors) {
  const BasedSpace v2 = BasedSpace::make(Q, 2);
  EXPECT_EQ(code_of([&] { braiding_from_diagonal(Matrix::from_ints(Q, 2, 2, {1, 0, 1, 1}), v2); }),
            Errc::zero_parameter);
  EXPECT_EQ(code_of([&] { braiding_from_matrix(Matrix(Q, 4, 4), v2); }), Errc::not_invertible);
  EXPECT_EQ(code_of([&] { braiding_from_matrix(Matrix::identity(Q, 3), v2); }), Errc::shape_mismatch);
  // An invertible matrix that is not a braiding: the flip plus a nilpotent corner.
  Matrix c = Matrix::flip(Q, 2, 2);
  c.set(0, 1, 1);
  c.set(0, 3, 1);
  try {
    braiding_from_matrix(c, v2);
    FAIL() << "expected BraidEquationFails";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::braid_equation_fails);
    ASSERT_TRUE(e.position().has_value());
    EXPECT_EQ(braid_residual(c, 2), e.position());
  }
  EXPECT_EQ(code_of([] { BasedSpace::make(Q, 2, {"x", "x"}); }), Errc::invalid_argument);
}

TEST(Braiding, StrandOperatorsAreKroneckerProducts) {
  const Braiding b = a2();
  const StrandAlgebra s(b, 4);
  std::mt19937_64 rng(11);
  for (std::size_t i = 1; i < 4; ++i) {
    const Matrix expect =
        kronecker(kronecker(Matrix::identity(F7, oracle::ipow(2, i - 1)), b.c()), Matrix::identity(F7, oracle::ipow(2, 3 - i)));
    EXPECT_EQ(s.c(i), expect);
    EXPECT_EQ(strand_operator(b, 4, i), expect);
    const Matrix m = oracle::random_matrix(F7, 16, 3, rng);
    EXPECT_EQ(s.apply(i, m), expect * m);
  }
}

TEST(Braiding, BraidRelationsOnStrands) {
  const StrandAlgebra s(a2(), 4);
  EXPECT_EQ(s.c(1) * s.c(2) * s.c(1), s.c(2) * s.c(1) * s.c(2));
  EXPECT_EQ(s.c(1) * s.c(3), s.c(3) * s.c(1));
}

TEST(Braiding, LiftIsIndependentOfReducedWord) {
  const StrandAlgebra s(a2(), 3);
  // s1 s2 s1 and s2 s1 s2 are both reduced words for the longest element.
  EXPECT_EQ(s.word_product({1, 2, 1}), s.word_product({2, 1, 2}));
  EXPECT_EQ(s.lift(permutation_from_word(3, {1, 2, 1})), s.word_product({2, 1, 2}));
}

TEST(Braiding, FlipLiftIsThePermutationMatrix) {
  const Braiding flip = trivial_braiding(BasedSpace::make(Q, 2));
  for (const auto& p : all_permutations(3)) {
    const Matrix m = permutation_lift(flip, 3, p);
    EXPECT_EQ(m, permutation_matrix(Q, 2, p));
    // Direct index oracle: factor i moves to position p[i].
    for (std::size_t col = 0; col < 8; ++col) {
      const auto w = oracle::word_of(col, 2, 3);
      std::vector<std::size_t> v(3);
      for (std::size_t i = 0; i < 3; ++i) v[p[i]] = w[i];
      EXPECT_EQ(m.at(oracle::index_of(v, 2), col), Scalar(Q, 1));
    }
  }
}

TEST(Braiding, DiagonalLiftMatchesWordOracle) {
  const Matrix q = Matrix::from_ints(F7, 2, 2, {2, 1, 4, 2});
  const Braiding b = braiding_from_diagonal(q, BasedSpace::make(F7, 2));
  Matrix sum(F7, 8, 8);
  for (const auto& p : all_permutations(3)) sum += permutation_lift(b, 3, p);
  EXPECT_EQ(sum, oracle::diagonal_symmetrizer(q, 3));
}
