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
#include <string>
#include <vector>

#include "braided/braided_space.hpp"
#include "braided/graded.hpp"

namespace braided {

/// Σ_{σ∈S_n} lift(σ).
Matrix symmetrizer_perm_sum(const Braiding& b, std::size_t n);
/// F_n = (id_V⊗F_{n-1})·Δ_{1,n-1} with Δ the unshuffle coproduct of T(V).
Matrix symmetrizer_via_psi(const Braiding& b, std::size_t n);
/// F_n = (id_V⊗F_{n-1})·(id + c_1 + c_1c_2 + … + c_1⋯c_{n-1}).
Matrix symmetrizer_recursive(const Braiding& b, std::size_t n);

/** The type-one bialgebra 𝟏[V] = Im(F: T(V) → T^c(V)) truncated at degree N. */
struct TypeOneResult {
  std::vector<std::size_t> dims;
  /// Pivot columns of F_n inside V^{⊗n}.
  std::vector<Matrix> bases;
  /// Per degree: dim ker F_n − dim(V⊗ker F_{n-1} + ker F_{n-1}⊗V).
  std::vector<std::size_t> new_relations;
  /// The components F_n.
  GradedMap symmetrizer;
  TruncatedGradedBialgebra bialgebra;
};

TypeOneResult typeone_truncation(const Braiding& b, std::size_t N);

/// "1 + 2t + 4t^2"; zero coefficients are skipped, an all-zero series is "0".
std::string hilbert_text(const std::vector<std::size_t>& dims);

/// dim ker F_n − rank[id⊗K | K⊗id] for K a kernel basis of F_{n-1}.
std::vector<std::size_t> relation_degrees(const std::vector<Matrix>& symmetrizers, std::size_t dim);

struct MagnumVerdict {
  bool ideal_clause = false;  // A[2] = A[1]^2
  bool wedge_clause = false;  // A(2) = A_0^{∧2}
  bool holds() const { return ideal_clause && wedge_clause; }
};

MagnumVerdict magnum_check(const TruncatedGradedBialgebra& b);

/**
 * Verdicts of the equivalent characterizations of strongly graded coalgebras
 * and algebras, all within the truncation. The untruncated statements
 * "ψ mono" and "φ epi" are not decidable here and are not reported.
 */
struct EquivalenceReport {
  bool comult_all_mono = false;
  bool comult_a1_mono = false;
  bool psi_components_mono = false;
  bool wedge_equals_floor_all = false;
  bool wedge_equals_floor_2 = false;

  bool mult_all_epi = false;
  bool mult_a1_epi = false;
  bool phi_components_epi = false;
  bool ideal_equals_ceiling_all = false;
  bool ideal_equals_ceiling_2 = false;

  bool coalgebra_consistent() const;
  bool algebra_consistent() const;
};

EquivalenceReport equivalence_probe(const TruncatedGradedBialgebra& b);

}  // namespace braided
