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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "braided/field.hpp"

namespace braided {

/**
 * Dense matrix over an exact field, acting on column vectors. Composition g∘f
 * is the product g * f. Entries are row-major; rational entries are stored as
 * mpq_class and prime-field entries as residues.
 */
class Matrix {
 public:
  Matrix() : Matrix(FieldSpec::rational(), 0, 0) {}
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix zero(FieldSpec field, std::size_t rows, std::size_t cols) {
    return Matrix(field, rows, cols);
  }
  static Matrix identity(FieldSpec field, std::size_t n);
  /// Integer entries, row-major. Throws Errc::shape_mismatch on a size mismatch.
  static Matrix from_ints(FieldSpec field, std::size_t rows, std::size_t cols,
                          const std::vector<long>& entries);
  /// Row-major strings in Scalar syntax. Rows must have equal length.
  static Matrix from_strings(FieldSpec field, const std::vector<std::vector<std::string>>& rows);
  /// A single column.
  static Matrix column(FieldSpec field, const std::vector<Scalar>& entries);
  /// Unit column e_i of length n.
  static Matrix unit_vector(FieldSpec field, std::size_t n, std::size_t i);
  /// The flip X⊗Y → Y⊗X for dim X = m, dim Y = n.
  static Matrix flip(FieldSpec field, std::size_t m, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void set(std::size_t r, std::size_t c, long value);
  /// entry(r, c) += value.
  void add_to(std::size_t r, std::size_t c, const Scalar& value);

  bool is_zero() const;
  bool is_identity() const;
  /// Row-major first nonzero entry.
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;
  std::size_t nonzero_count() const;

  Matrix transpose() const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Columns [first, first + count).
  Matrix column_range(std::size_t first, std::size_t count) const;
  Matrix select_columns(std::span<const std::size_t> indices) const;
  Matrix row_range(std::size_t first, std::size_t count) const;

  /// Rows of canonical scalar strings.
  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_string() const;

  /// Low-level storage access for kernels. T is mpq_class or std::uint32_t.
  template <class T>
  std::vector<T>& values() {
    return std::get<std::vector<T>>(data_);
  }
  template <class T>
  const std::vector<T>& values() const {
    return std::get<std::vector<T>>(data_);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_;
  std::variant<std::vector<mpq_class>, std::vector<std::uint32_t>> data_;
};

/// f⊗g with (f⊗g)(e_i⊗e_j) = f(e_i)⊗g(e_j), basis index i·dim + j.
Matrix kronecker(const Matrix& f, const Matrix& g);
/// Left-to-right Kronecker product of all factors; the empty product is [[1]].
Matrix kronecker_all(FieldSpec field, std::span<const Matrix> factors);
Matrix hstack(std::span<const Matrix> blocks);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(std::span<const Matrix> blocks);
Matrix vstack(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Over the rationals the elimination is fraction free.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Columns form a basis of ker m, one per free column in increasing order.
Matrix kernel_basis(const Matrix& m);
/// The pivot columns of m, in order.
Matrix image_basis(const Matrix& m);
std::vector<std::size_t> pivot_columns(const Matrix& m);
/// Throws Errc::not_invertible for singular or non-square input.
Matrix inverse(const Matrix& m);
/// X with a * X = b; throws Errc::invalid_argument when no solution exists.
/// When a has independent columns the solution is unique.
Matrix solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> try_solve(const Matrix& a, const Matrix& b);

bool is_injective(const Matrix& m);
bool is_surjective(const Matrix& m);
/// span(columns of a) == span(columns of b); both must have the same row count.
bool same_column_space(const Matrix& a, const Matrix& b);
/// span(b) ⊆ span(a).
bool column_space_contains(const Matrix& a, const Matrix& b);

/**
 * Quotient of an ambient space by the span of independent columns X. The
 * ambient basis is completed by X followed by the standard vectors not in
 * its span (pivot order); `projection` maps the ambient space onto the
 * coordinates of the complement and `section` embeds those coordinates back.
 */
struct Quotient {
  Matrix projection;
  Matrix section;
};
/// Throws Errc::basis_not_independent when the columns of sub are dependent.
Quotient quotient_by(const Matrix& sub, std::size_t ambient_dim);

}  // namespace braided
