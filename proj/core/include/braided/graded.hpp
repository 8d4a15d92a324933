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
#include <string>
#include <utility>
#include <vector>

#include "braided/field.hpp"
#include "braided/matrix.hpp"

namespace braided {

/** Dimensions of the components X_0 … X_N of a degree-truncated graded space. */
struct GradedSpace {
  FieldSpec field;
  std::vector<std::size_t> dims;

  std::size_t top_degree() const { return dims.empty() ? 0 : dims.size() - 1; }
  std::size_t total_dim() const;
};

/** A degree-preserving map given by its components f_n. */
struct GradedMap {
  std::vector<Matrix> components;
};

/**
 * Componentwise data of a graded braided bialgebra truncated at degree N:
 * m_{a,b}: A_a⊗A_b → A_{a+b}, Δ_{a,b}: A_{a+b} → A_a⊗A_b and the braiding
 * components c_{a,b}: A_a⊗A_b → A_b⊗A_a, all for a+b ≤ N, plus the unit
 * u: 𝟏 → A_0 and counit ε: A_0 → 𝟏.
 */
class TruncatedGradedBialgebra {
 public:
  TruncatedGradedBialgebra() = default;
  /// All components start as zero matrices of the right shape.
  TruncatedGradedBialgebra(FieldSpec field, std::vector<std::size_t> dims);

  const FieldSpec& field() const { return space_.field; }
  const GradedSpace& space() const { return space_; }
  std::size_t top_degree() const { return space_.top_degree(); }
  std::size_t dim(std::size_t n) const { return space_.dims.at(n); }

  const Matrix& mult(std::size_t a, std::size_t b) const;
  const Matrix& comult(std::size_t a, std::size_t b) const;
  const Matrix& braid(std::size_t a, std::size_t b) const;
  const Matrix& unit() const { return unit_; }
  const Matrix& counit() const { return counit_; }

  /// Setters check shapes and throw Errc::shape_mismatch.
  void set_mult(std::size_t a, std::size_t b, Matrix m);
  void set_comult(std::size_t a, std::size_t b, Matrix m);
  void set_braid(std::size_t a, std::size_t b, Matrix m);
  void set_unit(Matrix m);
  void set_counit(Matrix m);
  /// Sets every braiding component to the symmetric flip.
  void use_flip_braiding();

 private:
  std::size_t slot(std::size_t a, std::size_t b) const;

  GradedSpace space_;
  std::vector<Matrix> mult_, comult_, braid_;
  Matrix unit_, counit_;
};

/** One failed identity instance. */
struct Failure {
  std::vector<std::size_t> indices;
  std::pair<std::size_t, std::size_t> residual_entry{0, 0};
  std::string law;
};

/** Outcome of a checker: how many identity instances were evaluated and which failed. */
struct CheckReport {
  std::string check;
  std::size_t instances = 0;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
};

/// Coassociativity (a,b,c) for a+b+c ≤ N and counit laws per degree.
CheckReport check_graded_coalgebra_axioms(const TruncatedGradedBialgebra& b);
/// Associativity (a,b,c) for a+b+c ≤ N and unit laws per degree.
CheckReport check_graded_algebra_axioms(const TruncatedGradedBialgebra& b);
/// Δ∘m = (m⊗m)(A⊗c⊗A)(Δ⊗Δ) per (a,b,s,t) with a+b = s+t ≤ N, plus the
/// degree-0 unit/counit compatibilities.
CheckReport check_bialgebra_compat(const TruncatedGradedBialgebra& b);

enum class GradedSide { coalgebra, algebra };
/// Injectivity of every Δ_{i,j} or surjectivity of every m_{i,j}, i+j ≤ N.
CheckReport check_strongly_graded(const TruncatedGradedBialgebra& b, GradedSide side);

/** A graded subspace: per degree, a matrix whose columns span the component. */
using Subobject = std::vector<Matrix>;

/// ⊕_{i<n} A_i.
Subobject floor_subobject(const TruncatedGradedBialgebra& b, std::size_t n);
/// ⊕_{i≥n} A_i.
Subobject ceiling_subobject(const TruncatedGradedBialgebra& b, std::size_t n);
/// Degreewise equality of spans.
bool same_subobject(const Subobject& x, const Subobject& y);
std::vector<std::size_t> subobject_dims(const Subobject& x);

/// Iterated comultiplication A_{d_1+…+d_k} → A_{d_1}⊗…⊗A_{d_k}.
Matrix iterated_comult(const TruncatedGradedBialgebra& b, const std::vector<std::size_t>& parts);
/// Iterated multiplication A_{d_1}⊗…⊗A_{d_k} → A_{d_1+…+d_k}.
Matrix iterated_mult(const TruncatedGradedBialgebra& b, const std::vector<std::size_t>& parts);
/// Compositions of d into k positive parts, lexicographic.
std::vector<std::vector<std::size_t>> positive_compositions(std::size_t d, std::size_t k);

/// X ∧ Y = ker (p_X⊗p_Y)Δ, degreewise. Throws Errc::basis_not_independent.
Subobject wedge(const TruncatedGradedBialgebra& b, const Subobject& x, const Subobject& y);
/// A_0^{∧n}: n = 0 gives 0, n = 1 gives A_0.
Subobject wedge_power(const TruncatedGradedBialgebra& b, std::size_t n);
/// A[1]^n: spans of n-fold products of positive-degree elements.
Subobject ideal_power(const TruncatedGradedBialgebra& b, std::size_t n);

/// Checks the five morphism laws (mult, comult, unit, counit, braid).
CheckReport check_graded_morphism(const TruncatedGradedBialgebra& source,
                                  const TruncatedGradedBialgebra& target, const GradedMap& f);

/** Im(f) with its induced structure; bases[n] are pivot columns of f_n. */
struct ImageBialgebra {
  std::vector<Matrix> bases;
  TruncatedGradedBialgebra bialgebra;
};

/// Throws Errc::not_graded_bialgebra_morphism naming the first violated law.
ImageBialgebra image_bialgebra(const TruncatedGradedBialgebra& source,
                               const TruncatedGradedBialgebra& target, const GradedMap& f);

}  // namespace braided
