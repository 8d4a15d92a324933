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

#include "braided/cotensor_bialgebra.hpp"
#include "braided/error.hpp"
#include "braided/tensor_bialgebra.hpp"
#include "oracles.hpp"

using namespace braided;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F7 = FieldSpec::prime(7);

Matrix a2_q() { return Matrix::from_ints(F7, 2, 2, {2, 1, 4, 2}); }
Braiding diag(const Matrix& q) { return braiding_from_diagonal(q, BasedSpace::make(q.field(), q.rows())); }

void expect_bialgebra(const TruncatedGradedBialgebra& b) {
  EXPECT_TRUE(check_graded_coalgebra_axioms(b).passed());
  EXPECT_TRUE(check_graded_algebra_axioms(b).passed());
  const CheckReport r = check_bialgebra_compat(b);
  EXPECT_TRUE(r.passed()) << r.failures.size() << " of " << r.instances;
}

}  // namespace

TEST(TensorBialgebra, UnshuffleMatchesWordOracle) {
  const Matrix q = a2_q();
  const TruncatedGradedBialgebra t = build_tensor_bialgebra(diag(q), 4);
  for (std::size_t a = 0; a <= 4; ++a) {
    for (std::size_t b = 0; a + b <= 4; ++b) EXPECT_EQ(t.comult(a, b), oracle::diagonal_unshuffle(q, a, b)) << a << "," << b;
  }
  EXPECT_TRUE(t.mult(2, 1).is_identity());
}

TEST(CotensorBialgebra, ShuffleMatchesWordOracle) {
  const Matrix q = Matrix::from_ints(Q, 2, 2, {-1, 3, 5, 2});
  const TruncatedGradedBialgebra tc = build_cotensor_bialgebra(diag(q), 4);
  for (std::size_t a = 0; a <= 4; ++a) {
    for (std::size_t b = 0; a + b <= 4; ++b) EXPECT_EQ(tc.mult(a, b), oracle::diagonal_shuffle(q, a, b)) << a << "," << b;
  }
  EXPECT_TRUE(tc.comult(1, 2).is_identity());
}

TEST(TensorBialgebra, DegreeTwoComponentsByHand) {
  const Braiding b = diag(a2_q());
  const TruncatedGradedBialgebra t = build_tensor_bialgebra(b, 2);
  const TruncatedGradedBialgebra tc = build_cotensor_bialgebra(b, 2);
  const Matrix id4 = Matrix::identity(F7, 4);
  EXPECT_EQ(t.comult(1, 1), id4 + b.c());
  EXPECT_EQ(tc.mult(1, 1), id4 + b.c());
  EXPECT_EQ(t.braid(1, 1), b.c());
}

TEST(TensorBialgebra, AxiomsForDiagonalAndMatrixBraidings) {
  const Braiding a2 = diag(a2_q());
  expect_bialgebra(build_tensor_bialgebra(a2, 4));
  expect_bialgebra(build_cotensor_bialgebra(a2, 4));
  // Jordan braiding c(v⊗w) = g(w)⊗v, g = [[1,1],[0,1]].
  Matrix c(Q, 4, 4);
  const long g[2][2] = {{1, 1}, {0, 1}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        if (g[k][j]) c.add_to(k * 2 + i, i * 2 + j, Scalar(Q, g[k][j]));
  const Braiding jordan = braiding_from_matrix(c, BasedSpace::make(Q, 2));
  expect_bialgebra(build_tensor_bialgebra(jordan, 4));
  expect_bialgebra(build_cotensor_bialgebra(jordan, 4));
}

TEST(TensorBialgebra, StronglyGradedSides) {
  const Braiding b = diag(a2_q());
  EXPECT_TRUE(check_strongly_graded(build_tensor_bialgebra(b, 4), GradedSide::algebra).passed());
  EXPECT_TRUE(check_strongly_graded(build_cotensor_bialgebra(b, 4), GradedSide::coalgebra).passed());
}

TEST(CotensorBialgebra, WedgePowersAreFloors) {
  const TruncatedGradedBialgebra tc = build_cotensor_bialgebra(diag(a2_q()), 5);
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_TRUE(same_subobject(wedge_power(tc, n), floor_subobject(tc, n))) << n;
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; m + n <= 5; ++n) {
      EXPECT_TRUE(same_subobject(wedge(tc, wedge_power(tc, m), wedge_power(tc, n)), wedge_power(tc, m + n)));
    }
  }
}

TEST(TensorBialgebra, IdentityToCotensorIsNotAMorphism) {
  const Braiding b = diag(a2_q());
  const auto t = build_tensor_bialgebra(b, 2);
  const auto tc = build_cotensor_bialgebra(b, 2);
  GradedMap id{{Matrix::identity(F7, 1), Matrix::identity(F7, 2), Matrix::identity(F7, 4)}};
  EXPECT_FALSE(check_graded_morphism(t, tc, id).passed());
  EXPECT_THROW(image_bialgebra(t, tc, id), Error);
}
