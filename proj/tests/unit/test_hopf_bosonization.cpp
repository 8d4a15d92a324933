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

#include "braided/bosonization.hpp"
#include "braided/error.hpp"
#include "braided/hopf.hpp"
#include "braided/relative.hpp"

using namespace braided;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F7 = FieldSpec::prime(7);

YDModule sign_module() {
  const FinHopf h = group_algebra(cyclic_group(2), Q);
  return yd_from_group_data(h, {1}, {Matrix::from_ints(Q, 1, 1, {1}), Matrix::from_ints(Q, 1, 1, {-1})});
}

YDModule character_z3() {
  const FinHopf h = group_algebra(cyclic_group(3), F7);
  return yd_from_group_data(h, {1}, {Matrix::from_ints(F7, 1, 1, {1}), Matrix::from_ints(F7, 1, 1, {2}),
                                     Matrix::from_ints(F7, 1, 1, {4})});
}

/// Z/2 acting on a 2-dimensional module of degree g by the swap.
YDModule swap_module() {
  const FinHopf h = group_algebra(cyclic_group(2), Q);
  return yd_from_group_data(h, {1, 1}, {Matrix::identity(Q, 2), Matrix::from_ints(Q, 2, 2, {0, 1, 1, 0})});
}

/// Ψ(v⊗w) = deg(v)·w ⊗ v by hand for homogeneous data.
Matrix psi_by_hand(const YDModule& v, const std::vector<std::size_t>& degrees, const std::vector<Matrix>& actions) {
  const std::size_t d = v.dim;
  Matrix c(v.hopf.field, d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar a = actions[degrees[i]].at(k, j);
        if (!a.is_zero()) c.add_to(k * d + i, i * d + j, a);
      }
  return c;
}

}  // namespace

TEST(Hopf, GroupAlgebrasPass) {
  EXPECT_TRUE(check_hopf(group_algebra(cyclic_group(4), Q)).passed());
  EXPECT_TRUE(check_hopf(group_algebra(cyclic_group(3), F7)).passed());
  // Klein four-group.
  EXPECT_TRUE(check_hopf(group_algebra({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, Q)).passed());
  EXPECT_TRUE(check_hopf(trivial_hopf(Q)).passed());
}

TEST(Hopf, InvalidGroupTables) {
  for (const auto& t : std::vector<std::vector<std::vector<std::size_t>>>{
           {{0, 1}, {1, 1}}, {{1, 0}, {0, 1}}, {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}, {{0, 2}, {1, 0}}}) {
    try {
      make_group_table(t);
      FAIL() << "expected InvalidGroupTable";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::invalid_group_table);
    }
  }
}

TEST(YD, ValidAndInvalidModules) {
  EXPECT_TRUE(check_yd(sign_module()).passed());
  EXPECT_TRUE(check_yd(character_z3()).passed());
  EXPECT_TRUE(check_yd(swap_module()).passed());
  // The swap moves V_e to V_g, which is not a YD structure over an abelian group.
  const FinHopf h = group_algebra(cyclic_group(2), Q);
  const YDModule bad = yd_from_group_data(h, {0, 1}, {Matrix::identity(Q, 2), Matrix::from_ints(Q, 2, 2, {0, 1, 1, 0})});
  EXPECT_FALSE(check_yd(bad).passed());
  EXPECT_THROW(require_yd(bad), Error);
  // g² must act trivially.
  const YDModule not_module = yd_from_group_data(h, {1}, {Matrix::from_ints(Q, 1, 1, {1}), Matrix::from_ints(Q, 1, 1, {2})});
  EXPECT_FALSE(check_yd(not_module).passed());
}

TEST(YD, BraidingMatchesHandFormula) {
  EXPECT_EQ(braiding_from_yd(sign_module()).c(), Matrix::from_ints(Q, 1, 1, {-1}));
  EXPECT_EQ(braiding_from_yd(character_z3()).c(), Matrix::from_ints(F7, 1, 1, {2}));
  const YDModule s = swap_module();
  EXPECT_EQ(braiding_from_yd(s).c(),
            psi_by_hand(s, {1, 1}, {Matrix::identity(Q, 2), Matrix::from_ints(Q, 2, 2, {0, 1, 1, 0})}));
}

TEST(YD, AdjointStructuresOverAbelianGroups) {
  const FinHopf h = group_algebra(cyclic_group(3), F7);
  // g h g^{-1} = h.
  for (std::size_t g = 0; g < 3; ++g)
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = 0; y < 3; ++y) EXPECT_EQ(adjoint_action(h).at(y, g * 3 + x), Scalar(F7, y == x ? 1 : 0));
  EXPECT_TRUE(check_yd(adjoint_yd(h)).passed());
  EXPECT_TRUE(check_yd(coadjoint_yd(h)).passed());
  // coad(g) = g S(g) ⊗ g = 1 ⊗ g.
  for (std::size_t g = 0; g < 3; ++g) EXPECT_EQ(coadjoint_coaction(h).at(0 * 3 + g, g), Scalar(F7, 1));
}

TEST(HopfBimodule, LawsHoldOnInducedAndRegularBimodules) {
  for (const YDModule& v : {sign_module(), character_z3(), swap_module()}) {
    const CheckReport r = check_hopf_bimodule(yd_to_bimodule(v));
    EXPECT_TRUE(r.passed());
    EXPECT_GT(r.instances, 0u);
  }
  EXPECT_TRUE(check_hopf_bimodule(regular_bimodule(group_algebra(cyclic_group(3), Q))).passed());
}

TEST(HopfBimodule, CoinvariantsRecoverTheModule) {
  for (const YDModule& v : {sign_module(), character_z3(), swap_module()}) {
    const Coinvariants co = coinvariants(yd_to_bimodule(v));
    EXPECT_EQ(co.module.dim, v.dim);
    EXPECT_EQ(co.module.action, v.action);
    EXPECT_EQ(co.module.coaction, v.coaction);
  }
}

TEST(Relative, TensorAndCotensorDimensions) {
  const FinHopf h = group_algebra(cyclic_group(2), Q);
  const RelativeTypeOneResult r = relative_typeone(h, yd_to_bimodule(sign_module()), 4);
  EXPECT_EQ(r.dims, (std::vector<std::size_t>{2, 2, 0, 0, 0}));
  // M^{□n} and M^{⊗_H n} for M = V⊗H have dimension dim V^n · dim H.
  EXPECT_EQ(r.tensor_dims, (std::vector<std::size_t>{2, 2, 2, 2, 2}));
  EXPECT_EQ(r.cotensor_dims, (std::vector<std::size_t>{2, 2, 2, 2, 2}));
  EXPECT_TRUE(check_bialgebra_compat(r.bialgebra).passed());
}

TEST(Bosonization, SmashCheckSignModule) {
  const SmashVerdict v = typeone_smash_check(sign_module(), 4);
  EXPECT_EQ(v.dims_bosonization, (std::vector<std::size_t>{2, 2, 0, 0, 0}));
  EXPECT_TRUE(v.passed());
}

TEST(Bosonization, SmashCheckCharacterZ3) {
  const SmashVerdict v = typeone_smash_check(character_z3(), 4);
  EXPECT_EQ(v.dims_bosonization, (std::vector<std::size_t>{3, 3, 3, 0, 0}));
  EXPECT_EQ(v.dims_relative, v.dims_bosonization);
  EXPECT_TRUE(v.passed());
}

TEST(Bosonization, SmashCheckNonDiagonalAction) {
  const SmashVerdict v = typeone_smash_check(swap_module(), 3);
  EXPECT_TRUE(v.passed());
}

TEST(Bosonization, GradedYDStructure) {
  const YDTypeOne q = typeone_in_yd(character_z3(), 4);
  EXPECT_TRUE(check_graded_yd(q.bialgebra).passed());
  const TruncatedGradedBialgebra b = bosonize(q.bialgebra);
  EXPECT_TRUE(check_graded_coalgebra_axioms(b).passed());
  EXPECT_TRUE(check_graded_algebra_axioms(b).passed());
  EXPECT_TRUE(check_bialgebra_compat(b).passed());
}

TEST(Bosonization, ComultiplicationOfVTensorOne) {
  // Δ(v⊗1) = (v⊗1)⊗(1⊗1) + (1⊗g)⊗(v⊗1) for v of degree g.
  const YDTypeOne q = typeone_in_yd(sign_module(), 2);
  const TotalBialgebra t = bosonize_total(total_structure(q.bialgebra), q.bialgebra.hopf);
  // Basis of Q⋊H: (x, h) ↦ x·2 + h with x ∈ {1, v}, h ∈ {e, g}.
  const std::size_t one_e = 0, one_g = 1, v_e = 2, S = 4;
  Matrix expect(Q, S * S, 1);
  expect.set(v_e * S + one_e, 0, 1);
  expect.set(one_g * S + v_e, 0, 1);
  EXPECT_EQ(t.delta.column_range(v_e, 1), expect);
}

TEST(Bosonization, TotalAndGradedAgree) {
  const YDTypeOne q = typeone_in_yd(character_z3(), 2);
  const TruncatedGradedBialgebra g = bosonize(q.bialgebra);
  const TotalBialgebra t = bosonize_total(total_structure(q.bialgebra), q.bialgebra.hopf);
  // Degrees 0, 1, 2 each have dimension 3 after tensoring with H: the total
  // basis index of (x, h) is x·3 + h with x running over 1, v, v².
  const std::size_t S = 9;
  for (std::size_t a = 0; a <= 2; ++a) {
    for (std::size_t b = 0; a + b <= 2; ++b) {
      const Matrix& m = g.mult(a, b);
      for (std::size_t col = 0; col < 9; ++col) {
        const std::size_t left = a * 3 + col / 3, right = b * 3 + col % 3;
        for (std::size_t row = 0; row < 3; ++row) {
          EXPECT_EQ(t.m.at((a + b) * 3 + row, left * S + right), m.at(row, col));
        }
      }
    }
  }
}
