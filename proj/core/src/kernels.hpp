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

// Field-specialised arithmetic shared by the dense kernels. Each Ops type is
// a tiny value with the same interface so kernels are written once as
// templates and dispatched on the runtime FieldSpec.

#include <cstdint>
#include <utility>

#include <gmpxx.h>

#include "braided/error.hpp"
#include "braided/field.hpp"
#include "braided/matrix.hpp"

namespace braided::detail {

struct RationalOps {
  using value_type = mpq_class;

  static value_type zero() { return value_type(0); }
  static value_type one() { return value_type(1); }
  static value_type from_long(long v) { return value_type(v); }
  static bool is_zero(const value_type& a) { return sgn(a) == 0; }
  static bool is_one(const value_type& a) { return a == 1; }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type neg(const value_type& a) { return -a; }
  static void add_mul(value_type& acc, const value_type& a, const value_type& b) {
    acc += a * b;
  }
  static value_type inv(const value_type& a) {
    if (is_zero(a)) throw Error(Errc::division_by_zero, "division by zero");
    return 1 / a;
  }
  static Scalar to_scalar(FieldSpec f, const value_type& a) { return Scalar(f, a); }
  static value_type from_scalar(const Scalar& s) { return s.rational(); }
};

struct PrimeOps {
  using value_type = std::uint32_t;
  std::uint32_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_long(long v) const {
    long r = v % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<value_type>(r);
  }
  static bool is_zero(value_type a) { return a == 0; }
  static bool is_one(value_type a) { return a == 1; }
  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<value_type>(s >= p ? s - p : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t(a) + p - b);
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t(a) * b % p);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  void add_mul(value_type& acc, value_type a, value_type b) const { acc = add(acc, mul(a, b)); }
  value_type inv(value_type a) const {
    if (a == 0) throw Error(Errc::division_by_zero, "division by zero");
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
  Scalar to_scalar(FieldSpec f, value_type a) const { return Scalar(f, static_cast<long>(a)); }
  static value_type from_scalar(const Scalar& s) { return s.residue(); }
};

/// Calls fn(ops) with the Ops type matching the field.
template <class Fn>
decltype(auto) with_ops(const FieldSpec& field, Fn&& fn) {
  if (field.is_prime()) return std::forward<Fn>(fn)(PrimeOps{field.p});
  return std::forward<Fn>(fn)(RationalOps{});
}

}  // namespace braided::detail
