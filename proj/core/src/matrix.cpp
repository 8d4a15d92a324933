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

#include "braided/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "braided/error.hpp"
#include "kernels.hpp"

namespace braided {

using detail::PrimeOps;
using detail::RationalOps;
using detail::with_ops;

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* what) {
  if (!(a.field() == b.field())) {
    throw Error(Errc::field_mismatch, std::string(what) + ": operands over " +
                                          a.field().to_string() + " and " + b.field().to_string());
  }
}

void require_shape(bool ok, const std::string& message) {
  if (!ok) throw Error(Errc::shape_mismatch, message);
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), field_(field) {
  if (field.is_prime()) {
    data_ = std::vector<std::uint32_t>(rows * cols, 0);
  } else {
    data_ = std::vector<mpq_class>(rows * cols);
  }
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_ints(FieldSpec field, std::size_t rows, std::size_t cols,
                         const std::vector<long>& entries) {
  require_shape(entries.size() == rows * cols, "from_ints: expected " +
                                                   std::to_string(rows * cols) + " entries, got " +
                                                   std::to_string(entries.size()));
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, entries[i * cols + j]);
  }
  return m;
}

Matrix Matrix::from_strings(FieldSpec field, const std::vector<std::vector<std::string>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    require_shape(rows[i].size() == c, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar::parse(field, rows[i][j]));
  }
  return m;
}

Matrix Matrix::column(FieldSpec field, const std::vector<Scalar>& entries) {
  Matrix m(field, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Matrix Matrix::unit_vector(FieldSpec field, std::size_t n, std::size_t i) {
  Matrix m(field, n, 1);
  m.set(i, 0, 1);
  return m;
}

Matrix Matrix::flip(FieldSpec field, std::size_t m, std::size_t n) {
  Matrix out(field, m * n, m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(j * m + i, i * n + j, 1);
  }
  return out;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw Error(Errc::index_out_of_range, "entry (" + std::to_string(r) + "," +
                                              std::to_string(c) + ") of " + shape(*this));
  }
  if (field_.is_prime()) {
    return Scalar(field_, static_cast<long>(values<std::uint32_t>()[r * cols_ + c]));
  }
  return Scalar(field_, values<mpq_class>()[r * cols_ + c]);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (!(value.field() == field_)) {
    throw Error(Errc::field_mismatch, "scalar over " + value.field().to_string() +
                                          " stored into matrix over " + field_.to_string());
  }
  if (r >= rows_ || c >= cols_) {
    throw Error(Errc::index_out_of_range, "entry (" + std::to_string(r) + "," +
                                              std::to_string(c) + ") of " + shape(*this));
  }
  if (field_.is_prime()) {
    values<std::uint32_t>()[r * cols_ + c] = value.residue();
  } else {
    values<mpq_class>()[r * cols_ + c] = value.rational();
  }
}

void Matrix::set(std::size_t r, std::size_t c, long value) { set(r, c, Scalar(field_, value)); }

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& value) {
  set(r, c, at(r, c) + value);
}

bool Matrix::is_zero() const { return !first_nonzero().has_value(); }

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return with_ops(field_, [&](auto ops) {
    using T = typename decltype(ops)::value_type;
    const auto& v = values<T>();
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        const auto& x = v[i * cols_ + j];
        if (i == j ? !ops.is_one(x) : !ops.is_zero(x)) return false;
      }
    }
    return true;
  });
}

std::optional<std::pair<std::size_t, std::size_t>> Matrix::first_nonzero() const {
  return with_ops(field_, [&](auto ops) -> std::optional<std::pair<std::size_t, std::size_t>> {
    using T = typename decltype(ops)::value_type;
    const auto& v = values<T>();
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!ops.is_zero(v[k])) return std::make_pair(k / cols_, k % cols_);
    }
    return std::nullopt;
  });
}

std::size_t Matrix::nonzero_count() const {
  return with_ops(field_, [&](auto ops) {
    using T = typename decltype(ops)::value_type;
    const auto& v = values<T>();
    return static_cast<std::size_t>(
        std::count_if(v.begin(), v.end(), [&](const T& x) { return !ops.is_zero(x); }));
  });
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  with_ops(field_, [&](auto ops) {
    using T = typename decltype(ops)::value_type;
    const auto& src = values<T>();
    auto& dst = out.values<T>();
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) dst[j * rows_ + i] = src[i * cols_ + j];
    }
  });
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  with_ops(field_, [&](auto ops) {
    using T = typename decltype(ops)::value_type;
    for (auto& x : out.values<T>()) x = ops.neg(x);
  });
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  if (!(s.field() == field_)) throw Error(Errc::field_mismatch, "scaled: field mismatch");
  Matrix out = *this;
  with_ops(field_, [&](auto ops) {
    using T = typename decltype(ops)::value_type;
    const T f = ops.from_scalar(s);
    for (auto& x : out.values<T>()) x = ops.mul(x, f);
  });
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_field(*this, other, "matrix sum");
  require_shape(rows_ == other.rows_ && cols_ == other.cols_,
                "sum of " + shape(*this) + " and " + shape(other));
  with_ops(field_, [&](auto ops) {
    using T = typename decltype(ops)::value_type;
    auto& a = values<T>();
    const auto& b = other.values<T>();
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!ops.is_zero(b[k])) a[k] = ops.add(a[k], b[k]);
    }
  });
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_field(*this, other, "matrix difference");
  require_shape(rows_ == other.rows_ && cols_ == other.cols_,
                "difference of " + shape(*this) + " and " + shape(other));
  with_ops(field_, [&](auto ops) {
    using T = typename decltype(ops)::value_type;
    auto& a = values<T>();
    const auto& b = other.values<T>();
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!ops.is_zero(b[k])) a[k] = ops.sub(a[k], b[k]);
    }
  });
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "matrix product");
  require_shape(a.cols() == b.rows(), "product of " + shape(a) + " and " + shape(b));
  Matrix out(a.field(), a.rows(), b.cols());
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  with_ops(a.field(), [&](auto ops) {
    using T = typename decltype(ops)::value_type;
    const auto& av = a.values<T>();
    const auto& bv = b.values<T>();
    auto& ov = out.values<T>();
    // Sparse row lists of b keep the product cheap for the permutation-like
    // operators that dominate this library.
    std::vector<std::vector<std::size_t>> b_nonzero(k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        if (!ops.is_zero(bv[r * m + c])) b_nonzero[r].push_back(c);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t r = 0; r < k; ++r) {
        const T& x = av[i * k + r];
        if (ops.is_zero(x)) continue;
        for (std::size_t c : b_nonzero[r]) ops.add_mul(ov[i * m + c], x, bv[r * m + c]);
      }
    }
  });
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::column_range(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw Error(Errc::index_out_of_range, "column range out of bounds");
  std::vector<std::size_t> idx(count);
  for (std::size_t i = 0; i < count; ++i) idx[i] = first + i;
  return select_columns(idx);
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const {
  Matrix out(field_, rows_, indices.size());
  with_ops(field_, [&](auto ops) {
    using T = typename decltype(ops)::value_type;
    const auto& src = values<T>();
    auto& dst = out.values<T>();
    for (std::size_t j = 0; j < indices.size(); ++j) {
      if (indices[j] >= cols_) throw Error(Errc::index_out_of_range, "column index out of bounds");
      for (std::size_t i = 0; i < rows_; ++i) dst[i * indices.size() + j] = src[i * cols_ + indices[j]];
    }
  });
  return out;
}

Matrix Matrix::row_range(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw Error(Errc::index_out_of_range, "row range out of bounds");
  Matrix out(field_, count, cols_);
  with_ops(field_, [&](auto ops) {
    using T = typename decltype(ops)::value_type;
    const auto& src = values<T>();
    std::copy(src.begin() + first * cols_, src.begin() + (first + count) * cols_,
              out.values<T>().begin());
  });
  return out;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j).to_string();
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix kronecker(const Matrix& f, const Matrix& g) {
  require_same_field(f, g, "kronecker");
  const std::size_t fr = f.rows(), fc = f.cols(), gr = g.rows(), gc = g.cols();
  Matrix out(f.field(), fr * gr, fc * gc);
  const std::size_t oc = fc * gc;
  with_ops(f.field(), [&](auto ops) {
    using T = typename decltype(ops)::value_type;
    const auto& fv = f.values<T>();
    const auto& gv = g.values<T>();
    auto& ov = out.values<T>();
    for (std::size_t i = 0; i < fr; ++i) {
      for (std::size_t j = 0; j < fc; ++j) {
        const T& x = fv[i * fc + j];
        if (ops.is_zero(x)) continue;
        for (std::size_t k = 0; k < gr; ++k) {
          for (std::size_t l = 0; l < gc; ++l) {
            const T& y = gv[k * gc + l];
            if (!ops.is_zero(y)) ov[(i * gr + k) * oc + (j * gc + l)] = ops.mul(x, y);
          }
        }
      }
    }
  });
  return out;
}

Matrix kronecker_all(FieldSpec field, std::span<const Matrix> factors) {
  Matrix out = Matrix::identity(field, 1);
  for (const auto& f : factors) out = kronecker(out, f);
  return out;
}

Matrix hstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return Matrix();
  const FieldSpec field = blocks.front().field();
  const std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    require_same_field(blocks.front(), b, "hstack");
    require_shape(b.rows() == rows, "hstack row mismatch");
    cols += b.cols();
  }
  Matrix out(field, rows, cols);
  with_ops(field, [&](auto ops) {
    using T = typename decltype(ops)::value_type;
    auto& ov = out.values<T>();
    std::size_t offset = 0;
    for (const auto& b : blocks) {
      const auto& bv = b.values<T>();
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) ov[i * cols + offset + j] = bv[i * b.cols() + j];
      }
      offset += b.cols();
    }
  });
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  const Matrix blocks[] = {a, b};
  return hstack(blocks);
}

Matrix vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return Matrix();
  const FieldSpec field = blocks.front().field();
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    require_same_field(blocks.front(), b, "vstack");
    require_shape(b.cols() == cols, "vstack column mismatch");
    rows += b.rows();
  }
  Matrix out(field, rows, cols);
  with_ops(field, [&](auto ops) {
    using T = typename decltype(ops)::value_type;
    auto& ov = out.values<T>();
    std::size_t offset = 0;
    for (const auto& b : blocks) {
      const auto& bv = b.values<T>();
      std::copy(bv.begin(), bv.end(), ov.begin() + offset);
      offset += bv.size();
    }
  });
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  const Matrix blocks[] = {a, b};
  return vstack(blocks);
}

namespace {

// Gauss-Jordan over GF(p).
RrefResult rref_prime(const Matrix& m, PrimeOps ops) {
  Matrix out = m;
  auto& v = out.values<std::uint32_t>();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && v[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(v[piv * cols + j], v[r * cols + j]);
    }
    const std::uint32_t inv = ops.inv(v[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) v[r * cols + j] = ops.mul(v[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint32_t f = v[i * cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint32_t x = v[r * cols + j];
        if (x != 0) v[i * cols + j] = ops.sub(v[i * cols + j], ops.mul(f, x));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(out), std::move(pivots)};
}

// Fraction-free Gauss-Jordan over the integers after clearing denominators
// row by row. After step k every entry is a k x k minor of the cleared matrix,
// so each division by the previous pivot is exact.
RrefResult rref_rational(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const auto& src = m.values<mpq_class>();
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      const mpz_class& d = src[i * cols + j].get_den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& x = src[i * cols + j];
      if (sgn(x) != 0) a[i * cols + j] = x.get_num() * (l / x.get_den());
    }
  }
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  mpz_class t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv * cols + c]) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) swap(a[piv * cols + j], a[r * cols + j]);
    }
    const mpz_class p = a[r * cols + c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const mpz_class f = a[i * cols + c];
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        mpz_class& x = a[i * cols + j];
        const mpz_class& y = a[r * cols + j];
        if (sgn(x) == 0 && (sgn(f) == 0 || sgn(y) == 0)) continue;
        t = p * x;
        if (sgn(f) != 0 && sgn(y) != 0) t -= f * y;
        mpz_divexact(x.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * cols + c] = 0;
    }
    // Earlier pivot rows were scaled by p / prev like every other row; their
    // pivot entries now all equal p.
    prev = p;
    pivots.push_back(c);
    ++r;
  }
  Matrix out(FieldSpec::rational(), rows, cols);
  auto& ov = out.values<mpq_class>();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const mpz_class& p = a[i * cols + pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(a[i * cols + j]) == 0) continue;
      ov[i * cols + j] = mpq_class(a[i * cols + j], p);
      ov[i * cols + j].canonicalize();
    }
  }
  return {std::move(out), std::move(pivots)};
}

}  // namespace

RrefResult rref(const Matrix& m) {
  if (m.field().is_prime()) return rref_prime(m, PrimeOps{m.field().p});
  return rref_rational(m);
}

std::vector<std::size_t> pivot_columns(const Matrix& m) { return rref(m).pivots; }

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  const RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < cols; ++j) {
    if (!is_pivot[j]) free.push_back(j);
  }
  Matrix out(m.field(), cols, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    out.set(free[k], k, 1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      const Scalar x = r.reduced.at(i, free[k]);
      if (!x.is_zero()) out.set(r.pivots[i], k, -x);
    }
  }
  return out;
}

Matrix image_basis(const Matrix& m) {
  const auto piv = pivot_columns(m);
  return m.select_columns(piv);
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::not_invertible, "non-square matrix " + shape(m));
  const std::size_t n = m.rows();
  const RrefResult r = rref(hstack(m, Matrix::identity(m.field(), n)));
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) {
    throw Error(Errc::not_invertible, "singular " + shape(m) + " matrix");
  }
  return r.reduced.column_range(n, n);
}

std::optional<Matrix> try_solve(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "solve");
  require_shape(a.rows() == b.rows(), "solve: " + shape(a) + " against " + shape(b));
  const std::size_t n = a.cols();
  const RrefResult r = rref(hstack(a, b));
  Matrix x(a.field(), n, b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    const std::size_t p = r.pivots[i];
    if (p >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const Scalar v = r.reduced.at(i, n + j);
      if (!v.is_zero()) x.set(p, j, v);
    }
  }
  return x;
}

Matrix solve(const Matrix& a, const Matrix& b) {
  auto x = try_solve(a, b);
  if (!x) throw Error(Errc::invalid_argument, "linear system has no solution");
  return *std::move(x);
}

bool is_injective(const Matrix& m) { return rank(m) == m.cols(); }
bool is_surjective(const Matrix& m) { return rank(m) == m.rows(); }

bool column_space_contains(const Matrix& a, const Matrix& b) {
  require_shape(a.rows() == b.rows(), "column spaces of different ambient dimension");
  if (b.cols() == 0) return true;
  return rank(hstack(a, b)) == rank(a);
}

bool same_column_space(const Matrix& a, const Matrix& b) {
  require_shape(a.rows() == b.rows(), "column spaces of different ambient dimension");
  const std::size_t ra = rank(a), rb = rank(b);
  if (ra != rb) return false;
  if (a.cols() == 0 || b.cols() == 0) return ra == 0;
  return rank(hstack(a, b)) == ra;
}

Quotient quotient_by(const Matrix& sub, std::size_t ambient_dim) {
  const FieldSpec field = sub.field();
  if (sub.cols() > 0) {
    require_shape(sub.rows() == ambient_dim, "quotient: subspace of wrong ambient dimension");
    if (rank(sub) != sub.cols()) {
      throw Error(Errc::basis_not_independent, "subspace columns are linearly dependent");
    }
  }
  const std::size_t k = sub.cols();
  Matrix full = k == 0 ? Matrix::identity(field, ambient_dim)
                       : hstack(sub, Matrix::identity(field, ambient_dim));
  const auto piv = pivot_columns(full);
  // Completion: the first k pivots are the subspace columns.
  std::vector<std::size_t> complement;
  for (std::size_t p : piv) {
    if (p >= k) complement.push_back(p);
  }
  Matrix basis = full.select_columns(piv);
  Matrix inv = inverse(basis);
  Quotient q;
  q.projection = inv.row_range(k, ambient_dim - k);
  q.section = full.select_columns(complement);
  return q;
}

}  // namespace braided
