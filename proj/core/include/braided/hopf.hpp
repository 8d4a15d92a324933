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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "braided/braided_space.hpp"
#include "braided/field.hpp"
#include "braided/graded.hpp"
#include "braided/matrix.hpp"

namespace braided {

/** Multiplication table of a finite group; element 0 is the identity. */
struct GroupTable {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> mul;
  std::vector<std::size_t> inv;
};

/// Validates closure, identity at index 0, associativity and inverses.
/// Throws Errc::invalid_group_table.
GroupTable make_group_table(std::vector<std::vector<std::size_t>> table);
GroupTable cyclic_group(std::size_t n);

/** Structure matrices of a finite-dimensional Hopf algebra in vector spaces with the flip. */
struct FinHopf {
  FieldSpec field;
  std::size_t dim = 0;
  Matrix m, u, delta, eps, S, S_inv;
  /// Present for group algebras; basis vector g is the group element g.
  std::optional<GroupTable> group;
};

/// kG with Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹.
FinHopf group_algebra(const GroupTable& g, FieldSpec field);
/// Throws Errc::invalid_group_table.
FinHopf group_algebra(std::vector<std::vector<std::size_t>> table, FieldSpec field);
/// The one-dimensional Hopf algebra 𝟏.
FinHopf trivial_hopf(FieldSpec field);

CheckReport check_hopf(const FinHopf& h);

/** A left-left Yetter–Drinfeld module: action H⊗V → V and coaction V → H⊗V. */
struct YDModule {
  FinHopf hopf;
  std::size_t dim = 0;
  Matrix action;
  Matrix coaction;
};

/**
 * Builds a YD module over kG from a homogeneous basis: basis vector j has
 * degree degrees[j] and g acts by actions[g] (columns are images). Laws are
 * not checked here; see check_yd.
 */
YDModule yd_from_group_data(const FinHopf& h, const std::vector<std::size_t>& degrees,
                            const std::vector<Matrix>& actions);

/// Module, comodule and Yetter–Drinfeld compatibility laws.
CheckReport check_yd(const YDModule& v);
/// Throws Errc::axiom_fails naming the first failed law.
void require_yd(const YDModule& v);

/// Ψ_{V,V} = (μ⊗V)(H⊗c_{V,V})(ρ⊗V) as a validated braiding.
Braiding braiding_from_yd(const YDModule& v, std::vector<std::string> labels = {});

/** An H-bimodule and H-bicomodule (left/right actions and coactions). */
struct HopfBimodule {
  FinHopf hopf;
  std::size_t dim = 0;
  Matrix mu_l, mu_r, rho_l, rho_r;
};

CheckReport check_hopf_bimodule(const HopfBimodule& m);
/// V⊗H with μ^l = (μ⊗m)(H⊗c⊗H)(Δ⊗V⊗H), μ^r = V⊗m, ρ^l = (m⊗V⊗H)(H⊗c⊗H)(ρ⊗Δ), ρ^r = V⊗Δ.
HopfBimodule yd_to_bimodule(const YDModule& v);
/// H as a bimodule and bicomodule over itself.
HopfBimodule regular_bimodule(const FinHopf& h);

struct Coinvariants {
  /// Columns span M^{coH} inside M.
  Matrix basis;
  /// Induced adjoint action h₁·m·S(h₂) and restricted left coaction.
  YDModule module;
};

/// M^{coH} = ker(ρ^r − M⊗u).
Coinvariants coinvariants(const HopfBimodule& m);

/// ad = m(m⊗H)(H⊗c)(H⊗S⊗H)(Δ⊗H): H⊗H → H.
Matrix adjoint_action(const FinHopf& h);
/// coad = (m⊗H)(H⊗S⊗H)(H⊗c)(Δ⊗H)Δ: H → H⊗H.
Matrix coadjoint_coaction(const FinHopf& h);
/// (H, ad, Δ).
YDModule adjoint_yd(const FinHopf& h);
/// (H, m, coad).
YDModule coadjoint_yd(const FinHopf& h);

/** V⊗_A W as a quotient of V⊗W. */
struct RelativeTensor {
  std::size_t dim = 0;
  Matrix projection;  // V⊗W → V⊗_A W
  Matrix section;     // V⊗_A W → V⊗W
};

/** V□_C W as a subspace of V⊗W. */
struct RelativeCotensor {
  std::size_t dim = 0;
  Matrix inclusion;   // V□_C W → V⊗W
  Matrix retraction;  // left inverse of the inclusion
};

/// Quotient of V⊗W by the image of μ^r_V⊗W − V⊗μ^l_W: V⊗A⊗W → V⊗W.
RelativeTensor tensor_over_algebra(const Matrix& right_action, std::size_t dim_v, const Matrix& left_action,
                                   std::size_t dim_w);
/// Kernel of ρ^r_V⊗W − V⊗ρ^l_W: V⊗W → V⊗C⊗W.
RelativeCotensor cotensor_over_coalgebra(const Matrix& right_coaction, std::size_t dim_v,
                                         const Matrix& left_coaction, std::size_t dim_w);
RelativeTensor tensor_over_algebra(const HopfBimodule& m1, const HopfBimodule& m2);
RelativeCotensor cotensor_over_coalgebra(const HopfBimodule& m1, const HopfBimodule& m2);

}  // namespace braided
