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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace braided {

/** The exact base field: the rationals or a prime field GF(p) with p < 2^31. */
struct FieldSpec {
  enum class Kind { rational, prime };

  Kind kind = Kind::rational;
  std::uint32_t p = 0;

  static FieldSpec rational() { return {}; }
  /// Throws Errc::invalid_argument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  bool is_prime() const { return kind == Kind::prime; }
  /// "Q" or "GF(p)".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Accepts "Q", "rational", "GF(p)" and "prime:p".
FieldSpec parse_field(std::string_view text);

bool is_prime_number(std::uint64_t n);

/**
 * An exact field element. Rationals are kept in lowest terms with a positive
 * denominator, residues in [0, p).
 */
class Scalar {
 public:
  explicit Scalar(FieldSpec field = FieldSpec::rational(), long value = 0);
  Scalar(FieldSpec field, const mpq_class& value);

  /// Parses "a/b" or an integer. Over GF(p) negative values and fractions are reduced.
  static Scalar parse(FieldSpec field, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Only meaningful over the rationals.
  const mpq_class& rational() const { return q_; }
  /// Only meaningful over a prime field.
  std::uint32_t residue() const { return r_; }

  /// Canonical decimal form: "a/b", "a", or the residue.
  std::string to_string() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  FieldSpec field_;
  mpq_class q_;
  std::uint32_t r_ = 0;
};

enum class ArithOp { add, sub, mul, div };

/// Throws Errc::field_mismatch for operands of different fields and
/// Errc::division_by_zero for a zero divisor.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

}  // namespace braided
