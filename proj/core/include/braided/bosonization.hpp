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
#include <vector>

#include "braided/graded.hpp"
#include "braided/hopf.hpp"
#include "braided/typeone.hpp"

namespace braided {

/** A graded braided bialgebra in YD modules over H: per-degree action and coaction. */
struct YDGradedBialgebra {
  FinHopf hopf;
  TruncatedGradedBialgebra algebra;
  std::vector<Matrix> action;    // H⊗Q_n → Q_n
  std::vector<Matrix> coaction;  // Q_n → H⊗Q_n
};

/// Diagonal action on V^{⊗n}, n = 0..N (degree 0 is ε).
std::vector<Matrix> tensor_power_actions(const YDModule& v, std::size_t N);
/// Codiagonal coaction on V^{⊗n}, n = 0..N (degree 0 is u).
std::vector<Matrix> tensor_power_coactions(const YDModule& v, std::size_t N);

/** 𝟏[V] computed for the braiding Ψ of V, with the YD structures restricted to it. */
struct YDTypeOne {
  TypeOneResult typeone;
  YDGradedBialgebra bialgebra;
};
YDTypeOne typeone_in_yd(const YDModule& v, std::size_t N);

/// Per-degree YD laws of a graded bialgebra in YD modules.
CheckReport check_graded_yd(const YDGradedBialgebra& q);

/// Q⋊H with (Q⋊H)_n = Q_n⊗H, components from the smash formulas, flip braiding.
TruncatedGradedBialgebra bosonize(const YDGradedBialgebra& q);

/** Ungraded structure maps on the direct sum of all truncated components. */
struct TotalBialgebra {
  FieldSpec field;
  std::size_t dim = 0;
  Matrix m, u, delta, eps;
  Matrix action, coaction;  // only meaningful for YD data
};

/// Assembles the components into maps on ⊕_{n≤N} Q_n; products beyond N are dropped.
TotalBialgebra total_structure(const YDGradedBialgebra& q);
/// m, u, Δ, ε of Q⋊H from structure constants.
TotalBialgebra bosonize_total(const TotalBialgebra& q, const FinHopf& h);

/** Outcome of comparing 𝟏[V]⋊H with H[V⊗H]. */
struct SmashVerdict {
  std::vector<std::size_t> dims_bosonization;
  std::vector<std::size_t> dims_relative;
  bool dims_equal = false;
  /// The canonical coalgebra map into T^c_H(V⊗H) sends 𝟏[V]⋊H onto H[V⊗H].
  bool images_equal = false;
  /// That map intertwines all structure components up to the truncation degree.
  bool structure_iso = false;
  /// Highest degree at which structure matching was verified.
  std::size_t iso_degree = 0;
  bool coinvariants_recover = false;
  bool bosonization_axioms = false;
  bool relative_axioms = false;

  bool passed() const {
    return dims_equal && images_equal && structure_iso && coinvariants_recover && bosonization_axioms &&
           relative_axioms;
  }
};

SmashVerdict typeone_smash_check(const YDModule& v, std::size_t N);

}  // namespace braided
