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

namespace braided {

/**
 * The type-one bialgebra H[M] = Im(F: T_H(M) → T^c_H(M)) truncated at N.
 * Degree n lives inside M^{⊗n}: F is computed on representatives and then
 * checked to vanish on the relations of M^{⊗_H n} and to land in M^{□_H n}.
 */
struct RelativeTypeOneResult {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> tensor_dims;    // dim M^{⊗_H n}
  std::vector<std::size_t> cotensor_dims;  // dim M^{□_H n}
  /// F on M^{⊗n} (degree 0: the identity of H).
  std::vector<Matrix> lifts;
  /// Pivot columns of lifts[n]; degree 0 is the identity of H.
  std::vector<Matrix> bases;
  TruncatedGradedBialgebra bialgebra;
};

/// Throws Errc::axiom_fails if F does not factor through M^{⊗_H n} or leaves M^{□_H n}.
RelativeTypeOneResult relative_typeone(const FinHopf& h, const HopfBimodule& m, std::size_t N);

/// The (1, n-1) component of the comultiplication of T_H(M), lifted to M^{⊗n}.
Matrix relative_comult_lift(const HopfBimodule& m, std::size_t n);

}  // namespace braided
