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

#include "braided/dsl.hpp"
#include "braided/hopf.hpp"

namespace braided::dsl {

/**
 * Objects H (Hopf algebra), V (YD module), M (Hopf bimodule), Q (graded YD
 * bialgebra, all degrees summed) and Qa, Qb, Qab (the components of Q in
 * degrees a, b and a+b), with their structure generators:
 *
 *   H:  m u delta eps S Sinv        V: mu rho
 *   M:  mu_l mu_r rho_l rho_r       Q: mQ uQ deltaQ epsQ muQ rhoQ
 *   graded: mab : Qa Qb -> Qab, deltaab : Qab -> Qa Qb, muQb, rhoQb
 */
Signature canonical_signature();

/** A named formula. Identities have both sides; value formulas only `lhs`. */
struct Builtin {
  std::string name;
  std::string source_lhs;
  std::string source_rhs;
  ExprPtr lhs;
  ExprPtr rhs;

  bool is_identity() const { return rhs != nullptr; }
};

/// The library, parsed and typechecked against canonical_signature().
const std::vector<Builtin>& builtin_formulas();
/// Throws Errc::unknown_name.
const Builtin& find_builtin(const std::string& name);

/// lhs − rhs for an identity, the value of lhs otherwise.
Matrix evaluate_builtin(const Builtin& b, const Environment& env);

/// Binds H, V and M = V⊗H only.
Environment yd_environment(const YDModule& v);

/**
 * Binds the canonical signature from a YD module over a group algebra:
 * M = V⊗H as a Hopf bimodule, Q = 𝟏[V] truncated at N with its YD
 * structure, and Qa, Qb, Qab its components (bound only when a + b ≤ N).
 */
Environment canonical_environment(const YDModule& v, std::size_t N, std::size_t a = 1, std::size_t b = 1);

}  // namespace braided::dsl
