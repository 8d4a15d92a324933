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

#include "braided/relative.hpp"

#include <functional>

#include "braided/braided_space.hpp"
#include "braided/error.hpp"
#include "braided/parallel.hpp"

namespace braided {

namespace {

struct Term {
  Scalar coef;
  std::size_t first;
  std::size_t second;
};

Matrix I(FieldSpec f, std::size_t n) { return Matrix::identity(f, n); }

/// Nonzero entries of a coaction column, split as (first, second) tensor indices.
std::vector<std::vector<Term>> coaction_terms(const Matrix& rho, std::size_t inner) {
  std::vector<std::vector<Term>> out(rho.cols());
  for (std::size_t j = 0; j < rho.cols(); ++j) {
    for (std::size_t r = 0; r < rho.rows(); ++r) {
      const Scalar x = rho.at(r, j);
      if (!x.is_zero()) out[j].push_back(Term{x, r / inner, r % inner});
    }
  }
  return out;
}

void add_column(Matrix& out, std::size_t col, const Matrix& v, const Scalar& coef) {
  for (std::size_t r = 0; r < v.rows(); ++r) {
    const Scalar x = v.at(r, 0);
    if (!x.is_zero()) out.add_to(r, col, coef * x);
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::axiom_fails, what);
}

}  // namespace

Matrix relative_comult_lift(const HopfBimodule& m, std::size_t n) {
  if (n < 2) throw Error(Errc::invalid_argument, "relative comultiplication lift needs degree >= 2");
  const FinHopf& h = m.hopf;
  const FieldSpec f = h.field;
  const std::size_t nh = h.dim, d = m.dim, size = tensor_power_dim(d, n);
  const auto left = coaction_terms(m.rho_l, d);   // (g, k)
  const auto right = coaction_terms(m.rho_r, nh);  // (k, g)
  auto unit_vec = [&](std::size_t len, std::size_t i) { return Matrix::unit_vector(f, len, i); };

  std::vector<Matrix> columns(size);
  parallel::for_each_index(size, [&](std::size_t col) {
    std::vector<std::size_t> digits(n);
    for (std::size_t k = n, rest = col; k-- > 0; rest /= d) digits[k] = rest % d;
    Matrix acc(f, size, 1);
    std::vector<const Term*> choice(n);
    for (std::size_t i = 0; i < n; ++i) {
      // Factor i sends its M-part to the left tensor factor via ρ^r; every
      // other factor sends its H-part there via ρ^l.
      std::function<void(std::size_t)> expand = [&](std::size_t p) {
        if (p < n) {
          const auto& terms = p == i ? right[digits[p]] : left[digits[p]];
          for (const auto& t : terms) {
            choice[p] = &t;
            expand(p + 1);
          }
          return;
        }
        Scalar coef(f, 1);
        Matrix hl = h.u, hr = h.u;
        for (std::size_t q = 0; q < n; ++q) {
          coef = coef * choice[q]->coef;
          if (q < i) hl = h.m * kronecker(hl, unit_vec(nh, choice[q]->first));
          if (q > i) hr = h.m * kronecker(hr, unit_vec(nh, choice[q]->first));
        }
        const std::size_t ki = choice[i]->first, gi = choice[i]->second;
        const Matrix lhs = m.mu_l * kronecker(hl, m.mu_r * kronecker(unit_vec(d, ki), hr));
        std::vector<Matrix> factors;
        for (std::size_t q = 0; q < n; ++q) {
          if (q != i) factors.push_back(unit_vec(d, choice[q]->second));
        }
        // The H-part of factor i multiplies into its neighbour on the right side.
        if (i > 0) {
          Matrix& prev = factors[i - 1];
          prev = m.mu_r * kronecker(prev, unit_vec(nh, gi));
        } else {
          Matrix& next = factors[0];
          next = m.mu_l * kronecker(unit_vec(nh, gi), next);
        }
        Matrix term = lhs;
        for (const auto& fct : factors) term = kronecker(term, fct);
        add_column(acc, 0, term, coef);
      };
      expand(0);
    }
    columns[col] = std::move(acc);
  });
  return hstack(columns);
}

RelativeTypeOneResult relative_typeone(const FinHopf& h, const HopfBimodule& m, std::size_t N) {
  const CheckReport laws = check_hopf_bimodule(m);
  if (!laws.passed()) throw Error(Errc::axiom_fails, "Hopf bimodule law '" + laws.failures.front().law + "' fails");
  const FieldSpec f = h.field;
  const std::size_t nh = h.dim, d = m.dim;
  RelativeTypeOneResult out;

  // Iterated M^{⊗_H n} (projection/section) and M^{□_H n} (inclusion/retraction).
  std::vector<Matrix> proj(N + 1), sect(N + 1), inc(N + 1), ret(N + 1);
  proj[0] = sect[0] = inc[0] = ret[0] = I(f, nh);
  out.tensor_dims.push_back(nh);
  out.cotensor_dims.push_back(nh);
  for (std::size_t n = 1; n <= N; ++n) {
    if (n == 1) {
      proj[1] = sect[1] = inc[1] = ret[1] = I(f, d);
    } else {
      const std::size_t prev = tensor_power_dim(d, n - 2);
      const Matrix right_action = proj[n - 1] * kronecker(I(f, prev), m.mu_r) * kronecker(sect[n - 1], I(f, nh));
      const RelativeTensor t = tensor_over_algebra(right_action, proj[n - 1].rows(), m.mu_l, d);
      proj[n] = t.projection * kronecker(proj[n - 1], I(f, d));
      sect[n] = kronecker(sect[n - 1], I(f, d)) * t.section;

      const Matrix right_coaction = kronecker(ret[n - 1], I(f, nh)) * kronecker(I(f, prev), m.rho_r) * inc[n - 1];
      const RelativeCotensor c = cotensor_over_coalgebra(right_coaction, inc[n - 1].cols(), m.rho_l, d);
      inc[n] = kronecker(inc[n - 1], I(f, d)) * c.inclusion;
      ret[n] = c.retraction * kronecker(ret[n - 1], I(f, d));
    }
    out.tensor_dims.push_back(proj[n].rows());
    out.cotensor_dims.push_back(inc[n].cols());
  }

  out.lifts.push_back(I(f, nh));
  if (N >= 1) out.lifts.push_back(I(f, d));
  for (std::size_t n = 2; n <= N; ++n) {
    out.lifts.push_back(kronecker(I(f, d), out.lifts[n - 1]) * relative_comult_lift(m, n));
  }

  std::vector<Matrix> select(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    const Matrix& lift = out.lifts[n];
    if (n >= 1) {
      const std::size_t size = lift.rows();
      require((lift * (I(f, size) - sect[n] * proj[n])).is_zero(),
              "F does not factor through the relative tensor power in degree " + std::to_string(n));
      require(inc[n] * (ret[n] * lift) == lift,
              "F leaves the relative cotensor power in degree " + std::to_string(n));
    }
    const auto piv = pivot_columns(lift);
    Matrix e(f, lift.cols(), piv.size());
    for (std::size_t k = 0; k < piv.size(); ++k) e.set(piv[k], k, 1);
    select[n] = std::move(e);
    out.bases.push_back(lift * select[n]);
    out.dims.push_back(piv.size());
  }

  TruncatedGradedBialgebra b(f, out.dims);
  const auto& B = out.bases;
  const auto& F = out.lifts;
  for (std::size_t a = 0; a <= N; ++a) {
    for (std::size_t c = 0; a + c <= N; ++c) {
      Matrix prod;
      if (a == 0 && c == 0) {
        prod = h.m;
      } else if (a == 0) {
        prod = F[c] * kronecker(m.mu_l, I(f, tensor_power_dim(d, c - 1))) * kronecker(I(f, nh), select[c]);
      } else if (c == 0) {
        prod = F[a] * kronecker(I(f, tensor_power_dim(d, a - 1)), m.mu_r) * kronecker(select[a], I(f, nh));
      } else {
        prod = F[a + c] * kronecker(select[a], select[c]);
      }
      b.set_mult(a, c, solve(B[a + c], prod));

      Matrix cop;
      if (a == 0 && c == 0) {
        cop = h.delta;
      } else if (a == 0) {
        cop = kronecker(m.rho_l, I(f, tensor_power_dim(d, c - 1))) * B[c];
      } else if (c == 0) {
        cop = kronecker(I(f, tensor_power_dim(d, a - 1)), m.rho_r) * B[a];
      } else {
        cop = B[a + c];
      }
      b.set_comult(a, c, solve(kronecker(B[a], B[c]), cop));
    }
  }
  b.use_flip_braiding();
  b.set_unit(h.u);
  b.set_counit(h.eps);
  out.bialgebra = std::move(b);
  return out;
}

}  // namespace braided
