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

#include "braided/hopf.hpp"

#include <functional>
#include <string>

#include "braided/error.hpp"

namespace braided {

namespace {

Matrix I(FieldSpec f, std::size_t n) { return Matrix::identity(f, n); }
Matrix flip(FieldSpec f, std::size_t a, std::size_t b) { return Matrix::flip(f, a, b); }
Matrix kron(const Matrix& a, const Matrix& b) { return kronecker(a, b); }
Matrix kron(const Matrix& a, const Matrix& b, const Matrix& c) { return kronecker(kronecker(a, b), c); }

void law(CheckReport& r, const std::string& name, const Matrix& lhs, const Matrix& rhs) {
  ++r.instances;
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    r.failures.push_back(Failure{{}, {0, 0}, name});
    return;
  }
  if (auto pos = (lhs - rhs).first_nonzero()) r.failures.push_back(Failure{{}, *pos, name});
}

/// Left inverse of a matrix with independent columns.
Matrix left_inverse(const Matrix& k) {
  const auto rows = pivot_columns(k.transpose());
  Matrix select(k.field(), rows.size(), k.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) select.set(i, rows[i], 1);
  return inverse(select * k) * select;
}

}  // namespace

GroupTable make_group_table(std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(Errc::invalid_group_table, "empty group table");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(Errc::invalid_group_table, "group table is not square");
    for (std::size_t v : row) {
      if (v >= n) throw Error(Errc::invalid_group_table, "group table entry out of range");
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (table[0][g] != g || table[g][0] != g) {
      throw Error(Errc::invalid_group_table, "element 0 is not the identity");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(Errc::invalid_group_table, "not associative at (" + std::to_string(a) + "," +
                                                     std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  GroupTable g{n, std::move(table), std::vector<std::size_t>(n, n)};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.mul[a][b] == 0 && g.mul[b][a] == 0) g.inv[a] = b;
    }
    if (g.inv[a] == n) throw Error(Errc::invalid_group_table, "element " + std::to_string(a) + " has no inverse");
  }
  return g;
}

GroupTable cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return make_group_table(std::move(t));
}

FinHopf group_algebra(const GroupTable& g, FieldSpec field) {
  const std::size_t n = g.order;
  FinHopf h{field, n, Matrix(field, n, n * n), Matrix(field, n, 1), Matrix(field, n * n, n),
            Matrix(field, 1, n), Matrix(field, n, n), Matrix(field, n, n), g};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) h.m.set(g.mul[a][b], a * n + b, 1);
    h.delta.set(a * n + a, a, 1);
    h.eps.set(0, a, 1);
    h.S.set(g.inv[a], a, 1);
    h.S_inv.set(g.inv[a], a, 1);
  }
  h.u.set(0, 0, 1);
  return h;
}

FinHopf group_algebra(std::vector<std::vector<std::size_t>> table, FieldSpec field) {
  return group_algebra(make_group_table(std::move(table)), field);
}

FinHopf trivial_hopf(FieldSpec field) { return group_algebra(cyclic_group(1), field); }

CheckReport check_hopf(const FinHopf& h) {
  const FieldSpec f = h.field;
  const std::size_t n = h.dim;
  const Matrix id = I(f, n);
  CheckReport r{"hopf_axioms", 0, {}};
  law(r, "associativity", h.m * kron(h.m, id), h.m * kron(id, h.m));
  law(r, "left_unit", h.m * kron(h.u, id), id);
  law(r, "right_unit", h.m * kron(id, h.u), id);
  law(r, "coassociativity", kron(h.delta, id) * h.delta, kron(id, h.delta) * h.delta);
  law(r, "left_counit", kron(h.eps, id) * h.delta, id);
  law(r, "right_counit", kron(id, h.eps) * h.delta, id);
  law(r, "compatibility", h.delta * h.m, kron(h.m, h.m) * kron(id, flip(f, n, n), id) * kron(h.delta, h.delta));
  law(r, "counit_mult", h.eps * h.m, kron(h.eps, h.eps));
  law(r, "comult_unit", h.delta * h.u, kron(h.u, h.u));
  law(r, "counit_unit", h.eps * h.u, I(f, 1));
  law(r, "antipode_left", h.m * kron(h.S, id) * h.delta, h.u * h.eps);
  law(r, "antipode_right", h.m * kron(id, h.S) * h.delta, h.u * h.eps);
  law(r, "antipode_inverse", h.S * h.S_inv, id);
  return r;
}

YDModule yd_from_group_data(const FinHopf& h, const std::vector<std::size_t>& degrees,
                            const std::vector<Matrix>& actions) {
  if (!h.group) throw Error(Errc::invalid_argument, "homogeneous YD data needs a group algebra");
  const std::size_t n = h.dim, d = degrees.size();
  if (actions.size() != n) {
    throw Error(Errc::shape_mismatch, "expected one action matrix per group element (" + std::to_string(n) + ")");
  }
  YDModule v{h, d, Matrix(h.field, d, n * d), Matrix(h.field, n * d, d)};
  for (std::size_t g = 0; g < n; ++g) {
    const Matrix& a = actions[g];
    if (a.rows() != d || a.cols() != d) throw Error(Errc::shape_mismatch, "action matrices must be dim x dim");
    if (!(a.field() == h.field)) throw Error(Errc::field_mismatch, "action matrix over the wrong field");
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const Scalar x = a.at(i, j);
        if (!x.is_zero()) v.action.set(i, g * d + j, x);
      }
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (degrees[j] >= n) throw Error(Errc::index_out_of_range, "degree index out of range");
    v.coaction.set(degrees[j] * d + j, j, 1);
  }
  return v;
}

CheckReport check_yd(const YDModule& v) {
  const FieldSpec f = v.hopf.field;
  const std::size_t n = v.hopf.dim, d = v.dim;
  const FinHopf& h = v.hopf;
  const Matrix iv = I(f, d), ih = I(f, n);
  CheckReport r{"yetter_drinfeld", 0, {}};
  law(r, "module_associativity", v.action * kron(h.m, iv), v.action * kron(ih, v.action));
  law(r, "module_unit", v.action * kron(h.u, iv), iv);
  law(r, "comodule_coassociativity", kron(h.delta, iv) * v.coaction, kron(ih, v.coaction) * v.coaction);
  law(r, "comodule_counit", kron(h.eps, iv) * v.coaction, iv);
  // Antipode-free compatibility: (m⊗μ)(H⊗c⊗V)(Δ⊗ρ) = (m⊗V)(H⊗c)(ρ⊗H)(μ⊗H)(H⊗c)(Δ⊗V).
  const Matrix lhs = kron(h.m, v.action) * kron(ih, flip(f, n, n), iv) * kron(h.delta, v.coaction);
  const Matrix rhs = kron(h.m, iv) * kron(ih, flip(f, d, n)) * kron(v.coaction, ih) * kron(v.action, ih) *
                     kron(ih, flip(f, n, d)) * kron(h.delta, iv);
  law(r, "yd_compatibility", lhs, rhs);
  return r;
}

void require_yd(const YDModule& v) {
  const CheckReport r = check_yd(v);
  if (!r.passed()) {
    const Failure& f = r.failures.front();
    throw Error(Errc::axiom_fails, "Yetter-Drinfeld law '" + f.law + "' fails", f.residual_entry);
  }
}

Braiding braiding_from_yd(const YDModule& v, std::vector<std::string> labels) {
  require_yd(v);
  const FieldSpec f = v.hopf.field;
  const std::size_t d = v.dim;
  // Index form of Ψ(v_i⊗v_j) = Σ ρ(v_i) = h⊗v_k terms: (h·v_j)⊗v_k.
  Matrix c(f, d * d, d * d);
  const std::size_t n = v.hopf.dim;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t h = 0; h < n; ++h) {
        for (std::size_t k = 0; k < d; ++k) {
          const Scalar co = v.coaction.at(h * d + k, i);
          if (co.is_zero()) continue;
          for (std::size_t l = 0; l < d; ++l) {
            const Scalar act = v.action.at(l, h * d + j);
            if (!act.is_zero()) c.add_to(l * d + k, i * d + j, co * act);
          }
        }
      }
    }
  }
  return Braiding::validated(BasedSpace::make(f, d, std::move(labels)), std::move(c));
}

CheckReport check_hopf_bimodule(const HopfBimodule& m) {
  const FinHopf& h = m.hopf;
  const FieldSpec f = h.field;
  const std::size_t n = h.dim, d = m.dim;
  const Matrix im = I(f, d), ih = I(f, n);
  CheckReport r{"hopf_bimodule", 0, {}};
  law(r, "left_module_associativity", m.mu_l * kron(h.m, im), m.mu_l * kron(ih, m.mu_l));
  law(r, "left_module_unit", m.mu_l * kron(h.u, im), im);
  law(r, "right_module_associativity", m.mu_r * kron(im, h.m), m.mu_r * kron(m.mu_r, ih));
  law(r, "right_module_unit", m.mu_r * kron(im, h.u), im);
  law(r, "bimodule", m.mu_r * kron(m.mu_l, ih), m.mu_l * kron(ih, m.mu_r));
  law(r, "left_comodule_coassociativity", kron(h.delta, im) * m.rho_l, kron(ih, m.rho_l) * m.rho_l);
  law(r, "left_comodule_counit", kron(h.eps, im) * m.rho_l, im);
  law(r, "right_comodule_coassociativity", kron(im, h.delta) * m.rho_r, kron(m.rho_r, ih) * m.rho_r);
  law(r, "right_comodule_counit", kron(im, h.eps) * m.rho_r, im);
  law(r, "bicomodule", kron(m.rho_l, ih) * m.rho_r, kron(ih, m.rho_r) * m.rho_l);
  law(r, "hopf_bimodule_1", m.rho_l * m.mu_l,
      kron(h.m, m.mu_l) * kron(ih, flip(f, n, n), im) * kron(h.delta, m.rho_l));
  law(r, "hopf_bimodule_2", m.rho_l * m.mu_r,
      kron(h.m, m.mu_r) * kron(ih, flip(f, d, n), ih) * kron(m.rho_l, h.delta));
  law(r, "hopf_bimodule_3", m.rho_r * m.mu_l,
      kron(m.mu_l, h.m) * kron(ih, flip(f, n, d), ih) * kron(h.delta, m.rho_r));
  law(r, "hopf_bimodule_4", m.rho_r * m.mu_r,
      kron(m.mu_r, h.m) * kron(im, flip(f, n, n), ih) * kron(m.rho_r, h.delta));
  return r;
}

HopfBimodule yd_to_bimodule(const YDModule& v) {
  const FinHopf& h = v.hopf;
  const FieldSpec f = h.field;
  const std::size_t n = h.dim, d = v.dim, dm = d * n;
  HopfBimodule m{h, dm, Matrix(f, dm, n * dm), Matrix(f, dm, dm * n), Matrix(f, n * dm, dm), Matrix(f, dm * n, dm)};
  // Structure constants of H, read once: x·y = Σ mult[x][y][z] z, Δ(x) = Σ cop[x][(y,z)] y⊗z.
  auto idx = [&](std::size_t j, std::size_t g) { return j * n + g; };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t g = 0; g < n; ++g) {
        const std::size_t col = x * dm + idx(j, g);
        // μ^l(x⊗v_j⊗g) = Σ (x₁·v_j)⊗(x₂ g).
        for (std::size_t x1 = 0; x1 < n; ++x1) {
          for (std::size_t x2 = 0; x2 < n; ++x2) {
            const Scalar cx = h.delta.at(x1 * n + x2, x);
            if (cx.is_zero()) continue;
            for (std::size_t k = 0; k < d; ++k) {
              const Scalar a = v.action.at(k, x1 * d + j);
              if (a.is_zero()) continue;
              for (std::size_t z = 0; z < n; ++z) {
                const Scalar p = h.m.at(z, x2 * n + g);
                if (!p.is_zero()) m.mu_l.add_to(idx(k, z), col, cx * a * p);
              }
            }
          }
        }
        // μ^r(v_j⊗g⊗x) = v_j⊗(g x).
        for (std::size_t z = 0; z < n; ++z) {
          const Scalar p = h.m.at(z, g * n + x);
          if (!p.is_zero()) m.mu_r.add_to(idx(j, z), idx(j, g) * n + x, p);
        }
      }
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t g = 0; g < n; ++g) {
      const std::size_t col = idx(j, g);
      for (std::size_t g1 = 0; g1 < n; ++g1) {
        for (std::size_t g2 = 0; g2 < n; ++g2) {
          const Scalar cg = h.delta.at(g1 * n + g2, g);
          if (cg.is_zero()) continue;
          // ρ^r(v_j⊗g) = v_j⊗g₁⊗g₂.
          m.rho_r.add_to(idx(j, g1) * n + g2, col, cg);
          // ρ^l(v_j⊗g) = Σ (v_{j(-1)} g₁)⊗v_{j(0)}⊗g₂.
          for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t k = 0; k < d; ++k) {
              const Scalar co = v.coaction.at(y * d + k, j);
              if (co.is_zero()) continue;
              for (std::size_t z = 0; z < n; ++z) {
                const Scalar p = h.m.at(z, y * n + g1);
                if (!p.is_zero()) m.rho_l.add_to(z * dm + idx(k, g2), col, cg * co * p);
              }
            }
          }
        }
      }
    }
  }
  return m;
}

HopfBimodule regular_bimodule(const FinHopf& h) { return HopfBimodule{h, h.dim, h.m, h.m, h.delta, h.delta}; }

Coinvariants coinvariants(const HopfBimodule& m) {
  const FinHopf& h = m.hopf;
  const FieldSpec f = h.field;
  const std::size_t n = h.dim, d = m.dim;
  const Matrix im = I(f, d), ih = I(f, n);
  Coinvariants out;
  out.basis = kernel_basis(m.rho_r - kron(im, h.u));
  const Matrix& k = out.basis;
  const std::size_t kd = k.cols();
  // h ▷ x = (h₁·x)·S(h₂).
  const Matrix adjoint = m.mu_r * kron(m.mu_l, h.S) * kron(ih, flip(f, n, d)) * kron(h.delta, im);
  out.module.hopf = h;
  out.module.dim = kd;
  out.module.action = solve(k, adjoint * kron(ih, k));
  out.module.coaction = solve(kron(ih, k), m.rho_l * k);
  return out;
}

Matrix adjoint_action(const FinHopf& h) {
  const FieldSpec f = h.field;
  const std::size_t n = h.dim;
  // ad(x⊗y) = x₁ y S(x₂), read from the structure constants.
  Matrix out(f, n, n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x1 = 0; x1 < n; ++x1) {
        for (std::size_t x2 = 0; x2 < n; ++x2) {
          const Scalar cx = h.delta.at(x1 * n + x2, x);
          if (cx.is_zero()) continue;
          for (std::size_t s = 0; s < n; ++s) {
            const Scalar sx = h.S.at(s, x2);
            if (sx.is_zero()) continue;
            for (std::size_t p = 0; p < n; ++p) {
              const Scalar a = h.m.at(p, x1 * n + y);
              if (a.is_zero()) continue;
              for (std::size_t z = 0; z < n; ++z) {
                const Scalar b = h.m.at(z, p * n + s);
                if (!b.is_zero()) out.add_to(z, x * n + y, cx * sx * a * b);
              }
            }
          }
        }
      }
    }
  }
  return out;
}

Matrix coadjoint_coaction(const FinHopf& h) {
  const FieldSpec f = h.field;
  const std::size_t n = h.dim;
  // coad(x) = x₁ S(x₃) ⊗ x₂.
  const Matrix delta2 = kron(h.delta, I(f, n)) * h.delta;
  Matrix out(f, n * n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t t = 0; t < n * n * n; ++t) {
      const Scalar c = delta2.at(t, x);
      if (c.is_zero()) continue;
      const std::size_t x1 = t / (n * n), x2 = (t / n) % n, x3 = t % n;
      for (std::size_t s = 0; s < n; ++s) {
        const Scalar sx = h.S.at(s, x3);
        if (sx.is_zero()) continue;
        for (std::size_t z = 0; z < n; ++z) {
          const Scalar p = h.m.at(z, x1 * n + s);
          if (!p.is_zero()) out.add_to(z * n + x2, x, c * sx * p);
        }
      }
    }
  }
  return out;
}

YDModule adjoint_yd(const FinHopf& h) { return YDModule{h, h.dim, adjoint_action(h), h.delta}; }
YDModule coadjoint_yd(const FinHopf& h) { return YDModule{h, h.dim, h.m, coadjoint_coaction(h)}; }

RelativeTensor tensor_over_algebra(const Matrix& right_action, std::size_t dim_v, const Matrix& left_action,
                                   std::size_t dim_w) {
  const FieldSpec f = right_action.field();
  const Matrix rel = kron(right_action, I(f, dim_w)) - kron(I(f, dim_v), left_action);
  const Matrix span = image_basis(rel);
  const Quotient q = quotient_by(span, dim_v * dim_w);
  return RelativeTensor{q.projection.rows(), q.projection, q.section};
}

RelativeCotensor cotensor_over_coalgebra(const Matrix& right_coaction, std::size_t dim_v,
                                         const Matrix& left_coaction, std::size_t dim_w) {
  const FieldSpec f = right_coaction.field();
  const Matrix eq = kron(right_coaction, I(f, dim_w)) - kron(I(f, dim_v), left_coaction);
  Matrix inc = kernel_basis(eq);
  Matrix ret = left_inverse(inc);
  return RelativeCotensor{inc.cols(), std::move(inc), std::move(ret)};
}

RelativeTensor tensor_over_algebra(const HopfBimodule& m1, const HopfBimodule& m2) {
  return tensor_over_algebra(m1.mu_r, m1.dim, m2.mu_l, m2.dim);
}

RelativeCotensor cotensor_over_coalgebra(const HopfBimodule& m1, const HopfBimodule& m2) {
  return cotensor_over_coalgebra(m1.rho_r, m1.dim, m2.rho_l, m2.dim);
}

}  // namespace braided
