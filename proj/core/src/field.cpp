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

#include "braided/field.hpp"

#include <charconv>
#include <limits>

#include "braided/error.hpp"

namespace braided {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime_number(p)) {
    throw Error(Errc::invalid_argument, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  FieldSpec f;
  f.kind = Kind::prime;
  f.p = static_cast<std::uint32_t>(p);
  return f;
}

std::string FieldSpec::to_string() const {
  return is_prime() ? "GF(" + std::to_string(p) + ")" : "Q";
}

namespace {

std::uint64_t parse_modulus(std::string_view digits, std::string_view whole) {
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(Errc::malformed_input, "bad field '" + std::string(whole) + "'");
  }
  return p;
}

}  // namespace

FieldSpec parse_field(std::string_view text) {
  if (text == "Q" || text == "rational") return FieldSpec::rational();
  if (text.starts_with("GF(") && text.ends_with(")")) {
    return FieldSpec::prime(parse_modulus(text.substr(3, text.size() - 4), text));
  }
  if (text.starts_with("prime:")) {
    return FieldSpec::prime(parse_modulus(text.substr(6), text));
  }
  throw Error(Errc::malformed_input, "unknown field '" + std::string(text) + "'");
}

namespace {

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw Error(Errc::division_by_zero, "division by zero");
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

void require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field())) {
    throw Error(Errc::field_mismatch,
                "operands over " + a.field().to_string() + " and " + b.field().to_string());
  }
}

}  // namespace

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field_.is_prime()) {
    r_ = reduce(mpz_class(value), field_.p);
  } else {
    q_ = value;
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field_.is_prime()) {
    r_ = static_cast<std::uint32_t>(
        std::uint64_t(reduce(value.get_num(), field_.p)) *
        inverse_mod(reduce(value.get_den(), field_.p), field_.p) % field_.p);
  } else {
    q_ = value;
    q_.canonicalize();
  }
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw Error(Errc::malformed_input, "empty scalar");
  if (s.front() == '+') s.erase(s.begin());
  mpq_class q;
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(Errc::malformed_input, "bad scalar '" + s + "'");
    q = mpq_class(mpz_class(s));
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-') {
      throw Error(Errc::malformed_input, "bad scalar '" + s + "'");
    }
    mpz_class d(den);
    if (d == 0) throw Error(Errc::division_by_zero, "zero denominator in '" + s + "'");
    q = mpq_class(mpz_class(num), d);
  }
  q.canonicalize();
  return Scalar(field, q);
}

bool Scalar::is_zero() const { return field_.is_prime() ? r_ == 0 : sgn(q_) == 0; }
bool Scalar::is_one() const { return field_.is_prime() ? r_ == 1 : q_ == 1; }

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(r_);
  return q_.get_str();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_prime()) {
    out.r_ = r_ == 0 ? 0 : field_.p - r_;
  } else {
    out.q_ = -q_;
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "division by zero");
  Scalar out = *this;
  if (field_.is_prime()) {
    out.r_ = inverse_mod(r_, field_.p);
  } else {
    out.q_ = 1 / q_;
  }
  return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  Scalar out = a;
  if (a.field_.is_prime()) {
    out.r_ = static_cast<std::uint32_t>((std::uint64_t(a.r_) + b.r_) % a.field_.p);
  } else {
    out.q_ = a.q_ + b.q_;
  }
  return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  Scalar out = a;
  if (a.field_.is_prime()) {
    out.r_ = static_cast<std::uint32_t>(std::uint64_t(a.r_) * b.r_ % a.field_.p);
  } else {
    out.q_ = a.q_ * b.q_;
  }
  return out;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_prime() ? a.r_ == b.r_ : a.q_ == b.q_;
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  require_same_field(a, b);
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  return a;
}

}  // namespace braided
