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

#include "braided/braided_space.hpp"

#include <set>

#include "braided/error.hpp"
#include "kernels.hpp"

namespace braided {

using detail::with_ops;

std::size_t tensor_power_dim(std::size_t dim, std::size_t n) {
  std::size_t out = 1;
  for (std::size_t k = 0; k < n; ++k) out *= dim;
  return out;
}

BasedSpace BasedSpace::make(FieldSpec field, std::size_t dim, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i + 1));
  }
  if (labels.size() != dim) {
    throw Error(Errc::invalid_argument, "expected " + std::to_string(dim) + " basis labels, got " +
                                            std::to_string(labels.size()));
  }
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw Error(Errc::invalid_argument, "basis labels must be distinct");
  return BasedSpace{field, dim, std::move(labels)};
}

std::optional<std::pair<std::size_t, std::size_t>> braid_residual(const Matrix& c, std::size_t dim) {
  const Matrix id = Matrix::identity(c.field(), dim);
  const Matrix c1 = kronecker(c, id);
  const Matrix c2 = kronecker(id, c);
  const Matrix residual = c1 * c2 * c1 - c2 * c1 * c2;
  return residual.first_nonzero();
}

Braiding Braiding::validated(BasedSpace space, Matrix c) {
  const std::size_t n = space.dim * space.dim;
  if (c.rows() != n || c.cols() != n) {
    throw Error(Errc::shape_mismatch, "braiding on a " + std::to_string(space.dim) +
                                          "-dimensional space must be " + std::to_string(n) + "x" +
                                          std::to_string(n));
  }
  if (!(c.field() == space.field)) throw Error(Errc::field_mismatch, "braiding and space fields differ");
  Matrix c_inv = inverse(c);
  if (auto pos = braid_residual(c, space.dim)) {
    throw Error(Errc::braid_equation_fails,
                "braid equation residual nonzero at (" + std::to_string(pos->first) + "," +
                    std::to_string(pos->second) + ")",
                pos);
  }
  return Braiding(std::move(space), std::move(c), std::move(c_inv));
}

Braiding braiding_from_diagonal(const Matrix& q, const BasedSpace& space) {
  const std::size_t d = space.dim;
  if (q.rows() != d || q.cols() != d) throw Error(Errc::shape_mismatch, "diagonal parameters must be dim x dim");
  Matrix c(space.field, d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Scalar v = q.at(i, j);
      if (v.is_zero()) {
        throw Error(Errc::zero_parameter, "q[" + std::to_string(i) + "][" + std::to_string(j) + "] is zero");
      }
      c.set(j * d + i, i * d + j, v);
    }
  }
  return Braiding::validated(space, std::move(c));
}

Braiding braiding_from_matrix(const Matrix& c, const BasedSpace& space) {
  return Braiding::validated(space, c);
}

Braiding trivial_braiding(const BasedSpace& space) {
  return Braiding::validated(space, Matrix::flip(space.field, space.dim, space.dim));
}

Matrix strand_operator(const Braiding& b, std::size_t n, std::size_t i) {
  if (i == 0 || i >= n) {
    throw Error(Errc::index_out_of_range,
                "strand " + std::to_string(i) + " outside 1.." + std::to_string(n == 0 ? 0 : n - 1));
  }
  const FieldSpec f = b.field();
  const std::size_t d = b.dim();
  return kronecker(kronecker(Matrix::identity(f, tensor_power_dim(d, i - 1)), b.c()),
                   Matrix::identity(f, tensor_power_dim(d, n - i - 1)));
}

StrandAlgebra::StrandAlgebra(const Braiding& b, std::size_t n)
    : block_(b.c()), dim_(b.dim()), n_(n), size_(tensor_power_dim(b.dim(), n)) {
  for (std::size_t i = 1; i < n; ++i) ops_.push_back(strand_operator(b, n, i));
}

const Matrix& StrandAlgebra::c(std::size_t i) const {
  if (i == 0 || i >= n_) throw Error(Errc::index_out_of_range, "strand index out of range");
  return ops_[i - 1];
}

Matrix StrandAlgebra::apply(std::size_t i, const Matrix& m) const {
  if (i == 0 || i >= n_) throw Error(Errc::index_out_of_range, "strand index out of range");
  if (m.rows() != size_) throw Error(Errc::shape_mismatch, "strand operator applied to wrong size");
  const std::size_t d2 = dim_ * dim_;
  const std::size_t suffix = tensor_power_dim(dim_, n_ - i - 1);
  const std::size_t prefix = tensor_power_dim(dim_, i - 1);
  const std::size_t cols = m.cols();
  Matrix out(m.field(), m.rows(), cols);
  with_ops(m.field(), [&](auto ops) {
    using T = typename decltype(ops)::value_type;
    const auto& cv = block_.values<T>();
    const auto& mv = m.values<T>();
    auto& ov = out.values<T>();
    for (std::size_t p = 0; p < prefix; ++p) {
      for (std::size_t r2 = 0; r2 < d2; ++r2) {
        for (std::size_t s = 0; s < suffix; ++s) {
          const std::size_t src = ((p * d2) + r2) * suffix + s;
          const T* src_row = &mv[src * cols];
          for (std::size_t r = 0; r < d2; ++r) {
            const T& x = cv[r * d2 + r2];
            if (ops.is_zero(x)) continue;
            T* dst_row = &ov[(((p * d2) + r) * suffix + s) * cols];
            for (std::size_t k = 0; k < cols; ++k) {
              if (!ops.is_zero(src_row[k])) ops.add_mul(dst_row[k], x, src_row[k]);
            }
          }
        }
      }
    }
  });
  return out;
}

Matrix StrandAlgebra::word_product(const std::vector<std::size_t>& word) const {
  Matrix out = Matrix::identity(block_.field(), size_);
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply(*it, out);
  return out;
}

Matrix StrandAlgebra::lift(const Permutation& sigma) const {
  if (sigma.size() != n_) throw Error(Errc::shape_mismatch, "permutation of wrong degree");
  return word_product(reduced_word(sigma));
}

Matrix permutation_lift(const Braiding& b, std::size_t n, const Permutation& sigma) {
  return StrandAlgebra(b, n).lift(sigma);
}

Matrix permutation_matrix(FieldSpec field, std::size_t dim, const Permutation& sigma) {
  const std::size_t size = tensor_power_dim(dim, sigma.size());
  Matrix out(field, size, size);
  for (std::size_t idx = 0; idx < size; ++idx) out.set(permute_index(sigma, dim, idx), idx, 1);
  return out;
}

}  // namespace braided
