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

#include "braided/error.hpp"
#include "braided/graded.hpp"
#include "braided/typeone.hpp"

using namespace braided;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);

/// Components forced by a one-dimensional degree 0, flip braiding.
TruncatedGradedBialgebra connected(FieldSpec f, std::vector<std::size_t> dims) {
  TruncatedGradedBialgebra b(f, dims);
  for (std::size_t n = 0; n < dims.size(); ++n) {
    const Matrix id = Matrix::identity(f, dims[n]);
    b.set_mult(0, n, id);
    b.set_mult(n, 0, id);
    b.set_comult(0, n, id);
    b.set_comult(n, 0, id);
  }
  b.set_unit(Matrix::identity(f, 1));
  b.set_counit(Matrix::identity(f, 1));
  b.use_flip_braiding();
  return b;
}

/// K[x]/(x^3) over GF(2) with x primitive: Δ(x²) = x²⊗1 + 1⊗x², valid up to degree 2.
TruncatedGradedBialgebra truncated_poly() {
  TruncatedGradedBialgebra b = connected(F2, {1, 1, 1});
  b.set_mult(1, 1, Matrix::from_ints(F2, 1, 1, {1}));
  b.set_comult(1, 1, Matrix::from_ints(F2, 1, 1, {0}));
  return b;
}

/// Divided powers over GF(2): x·x = 0, Δ(x^{(2)}) = x^{(2)}⊗1 + x⊗x + 1⊗x^{(2)}.
TruncatedGradedBialgebra divided_powers() {
  TruncatedGradedBialgebra b = connected(F2, {1, 1, 1});
  b.set_mult(1, 1, Matrix::from_ints(F2, 1, 1, {0}));
  b.set_comult(1, 1, Matrix::from_ints(F2, 1, 1, {1}));
  return b;
}

}  // namespace

TEST(GradedCore, ShapeChecks) {
  TruncatedGradedBialgebra b(F2, {1, 2});
  EXPECT_THROW(b.set_mult(0, 1, Matrix::identity(F2, 3)), Error);
  EXPECT_THROW(b.set_mult(1, 1, Matrix::identity(F2, 1)), std::exception);
}

TEST(GradedCore, TruncatedPolynomialFixtureIsABialgebra) {
  const auto b = truncated_poly();
  EXPECT_TRUE(check_graded_coalgebra_axioms(b).passed());
  EXPECT_TRUE(check_graded_algebra_axioms(b).passed());
  EXPECT_TRUE(check_bialgebra_compat(b).passed());
  EXPECT_FALSE(check_strongly_graded(b, GradedSide::coalgebra).passed());
  EXPECT_TRUE(check_strongly_graded(b, GradedSide::algebra).passed());
}

TEST(GradedCore, TruncatedPolynomialMagnumAndProbe) {
  const auto b = truncated_poly();
  const MagnumVerdict m = magnum_check(b);
  EXPECT_TRUE(m.ideal_clause);
  EXPECT_FALSE(m.wedge_clause);
  const EquivalenceReport p = equivalence_probe(b);
  EXPECT_FALSE(p.comult_all_mono);
  EXPECT_FALSE(p.comult_a1_mono);
  EXPECT_FALSE(p.psi_components_mono);
  EXPECT_FALSE(p.wedge_equals_floor_all);
  EXPECT_FALSE(p.wedge_equals_floor_2);
  EXPECT_TRUE(p.coalgebra_consistent());
  EXPECT_TRUE(p.algebra_consistent());
  // x² is primitive, so it lies in A_0^{∧2}.
  EXPECT_EQ(subobject_dims(wedge_power(b, 2)), (std::vector<std::size_t>{1, 1, 1}));
}

TEST(GradedCore, DividedPowersIdealPower) {
  const auto b = divided_powers();
  EXPECT_TRUE(check_bialgebra_compat(b).passed());
  EXPECT_TRUE(check_graded_algebra_axioms(b).passed());
  EXPECT_EQ(subobject_dims(ideal_power(b, 2)), (std::vector<std::size_t>{0, 0, 0}));
  EXPECT_EQ(subobject_dims(ceiling_subobject(b, 2)), (std::vector<std::size_t>{0, 0, 1}));
  const MagnumVerdict m = magnum_check(b);
  EXPECT_FALSE(m.ideal_clause);
  EXPECT_TRUE(m.wedge_clause);
  const EquivalenceReport p = equivalence_probe(b);
  EXPECT_TRUE(p.comult_all_mono);
  EXPECT_FALSE(p.mult_all_epi);
  EXPECT_TRUE(p.coalgebra_consistent());
  EXPECT_TRUE(p.algebra_consistent());
}

TEST(GradedCore, BrokenCompatibilityIsLocated) {
  TruncatedGradedBialgebra b = truncated_poly();
  b.set_comult(1, 1, Matrix::from_ints(F2, 1, 1, {1}));
  const CheckReport r = check_bialgebra_compat(b);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.failures.front().indices, (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(r.failures.front().residual_entry, (std::pair<std::size_t, std::size_t>{0, 0}));
  // The coalgebra and algebra laws still hold.
  EXPECT_TRUE(check_graded_coalgebra_axioms(b).passed());
}

TEST(GradedCore, BrokenCoassociativityIsLocated) {
  TruncatedGradedBialgebra b = connected(F2, {1, 1, 1});
  b.set_comult(0, 2, Matrix::from_ints(F2, 1, 1, {0}));
  const CheckReport r = check_graded_coalgebra_axioms(b);
  EXPECT_FALSE(r.passed());
  EXPECT_GT(r.instances, r.failures.size());
}

TEST(GradedCore, Compositions) {
  EXPECT_EQ(positive_compositions(4, 2).size(), 3u);
  EXPECT_EQ(positive_compositions(5, 3).size(), 6u);
  EXPECT_TRUE(positive_compositions(2, 3).empty());
}

TEST(GradedCore, IteratedMapsOfConnectedFixture) {
  const auto b = divided_powers();
  EXPECT_EQ(iterated_comult(b, {1, 1}), Matrix::from_ints(F2, 1, 1, {1}));
  EXPECT_TRUE(iterated_mult(b, {1, 1}).is_zero());
}

TEST(GradedCore, IdentityIsAMorphismAndImageIsItself) {
  const auto b = truncated_poly();
  GradedMap id;
  for (std::size_t n = 0; n <= 2; ++n) id.components.push_back(Matrix::identity(F2, 1));
  EXPECT_TRUE(check_graded_morphism(b, b, id).passed());
  const ImageBialgebra im = image_bialgebra(b, b, id);
  EXPECT_EQ(im.bialgebra.space().dims, b.space().dims);
  EXPECT_EQ(im.bialgebra.mult(1, 1), b.mult(1, 1));
}

TEST(GradedCore, NonMorphismIsRejected) {
  GradedMap f;
  f.components = {Matrix::identity(F2, 1), Matrix::identity(F2, 1), Matrix::identity(F2, 1)};
  try {
    image_bialgebra(truncated_poly(), divided_powers(), f);
    FAIL() << "expected NotGradedBialgebraMorphism";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_graded_bialgebra_morphism);
  }
}
