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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braided/field.hpp"
#include "braided/matrix.hpp"
#include "braided/permutation.hpp"

namespace braided {

/** A finite-dimensional vector space with a named basis. */
struct BasedSpace {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::string> labels;

  /// Labels default to x1, x2, …; throws Errc::invalid_argument on duplicates
  /// or a label count different from dim.
  static BasedSpace make(FieldSpec field, std::size_t dim, std::vector<std::string> labels = {});
};

/** A validated invertible solution c of the braid equation on V⊗V. */
class Braiding {
 public:
  const BasedSpace& space() const { return space_; }
  const FieldSpec& field() const { return space_.field; }
  std::size_t dim() const { return space_.dim; }
  const Matrix& c() const { return c_; }
  const Matrix& c_inv() const { return c_inv_; }

  /// Throws Errc::not_invertible or Errc::braid_equation_fails.
  static Braiding validated(BasedSpace space, Matrix c);

 private:
  Braiding(BasedSpace space, Matrix c, Matrix c_inv)
      : space_(std::move(space)), c_(std::move(c)), c_inv_(std::move(c_inv)) {}

  BasedSpace space_;
  Matrix c_;
  Matrix c_inv_;
};

/// The first nonzero entry of (c⊗id)(id⊗c)(c⊗id) − (id⊗c)(c⊗id)(id⊗c) on V^{⊗3}.
std::optional<std::pair<std::size_t, std::size_t>> braid_residual(const Matrix& c, std::size_t dim);

/// c(x_i⊗x_j) = q_ij x_j⊗x_i. Throws Errc::zero_parameter for a zero q_ij.
Braiding braiding_from_diagonal(const Matrix& q, const BasedSpace& space);
/// Throws Errc::shape_mismatch, Errc::not_invertible, Errc::braid_equation_fails.
Braiding braiding_from_matrix(const Matrix& c, const BasedSpace& space);
/// The symmetric flip.
Braiding trivial_braiding(const BasedSpace& space);

/// c_i = id^{⊗(i-1)} ⊗ c ⊗ id^{⊗(n-i-1)}, 1 ≤ i ≤ n-1.
Matrix strand_operator(const Braiding& b, std::size_t n, std::size_t i);

/**
 * Strand operators on V^{⊗n}, built once and reused. lift(σ) is the Matsumoto
 * lift c_{i_1}⋯c_{i_k} along the reduced word of σ.
 */
class StrandAlgebra {
 public:
  StrandAlgebra(const Braiding& b, std::size_t n);

  std::size_t degree() const { return n_; }
  std::size_t size() const { return size_; }
  const Matrix& c(std::size_t i) const;
  Matrix lift(const Permutation& sigma) const;
  /// Product of strand operators along an arbitrary word.
  Matrix word_product(const std::vector<std::size_t>& word) const;
  /// c_i · m, computed from the 2-strand block without forming c_i.
  Matrix apply(std::size_t i, const Matrix& m) const;

 private:
  Matrix block_;
  std::size_t dim_;
  std::size_t n_;
  std::size_t size_;
  std::vector<Matrix> ops_;
};

/// Matsumoto lift of sigma on V^{⊗n}.
Matrix permutation_lift(const Braiding& b, std::size_t n, const Permutation& sigma);

/// Plain permutation matrix: moves tensor factor i to position sigma[i].
Matrix permutation_matrix(FieldSpec field, std::size_t dim, const Permutation& sigma);

/// dim^n.
std::size_t tensor_power_dim(std::size_t dim, std::size_t n);

}  // namespace braided
