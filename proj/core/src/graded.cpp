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

#include "braided/graded.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "braided/error.hpp"
#include "braided/parallel.hpp"

namespace braided {

namespace {

std::string pair_text(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Matrix id(const TruncatedGradedBialgebra& b, std::size_t n) {
  return Matrix::identity(b.field(), b.dim(n));
}

std::optional<Failure> compare(const Matrix& lhs, const Matrix& rhs, std::vector<std::size_t> indices,
                               std::string law) {
  const auto pos = (lhs - rhs).first_nonzero();
  if (!pos) return std::nullopt;
  return Failure{std::move(indices), *pos, std::move(law)};
}

/// Runs every instance in parallel and keeps failures in instance order.
CheckReport run_instances(std::string name,
                          const std::vector<std::function<std::optional<Failure>()>>& instances) {
  std::vector<std::optional<Failure>> slots(instances.size());
  parallel::for_each_index(instances.size(), [&](std::size_t i) { slots[i] = instances[i](); });
  CheckReport report{std::move(name), instances.size(), {}};
  for (auto& s : slots) {
    if (s) report.failures.push_back(std::move(*s));
  }
  return report;
}

}  // namespace

std::size_t GradedSpace::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

TruncatedGradedBialgebra::TruncatedGradedBialgebra(FieldSpec field, std::vector<std::size_t> dims)
    : space_{field, std::move(dims)} {
  if (space_.dims.empty()) throw Error(Errc::invalid_argument, "graded space needs degree 0");
  const std::size_t n = top_degree();
  const std::size_t slots = (n + 1) * (n + 1);
  mult_.resize(slots);
  comult_.resize(slots);
  braid_.resize(slots);
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = 0; a + b <= n; ++b) {
      const std::size_t da = dim(a), db = dim(b), dab = dim(a + b);
      mult_[slot(a, b)] = Matrix(field, dab, da * db);
      comult_[slot(a, b)] = Matrix(field, da * db, dab);
      braid_[slot(a, b)] = Matrix(field, db * da, da * db);
    }
  }
  unit_ = Matrix(field, dim(0), 1);
  counit_ = Matrix(field, 1, dim(0));
}

std::size_t TruncatedGradedBialgebra::slot(std::size_t a, std::size_t b) const {
  if (a + b > top_degree()) {
    throw Error(Errc::index_out_of_range, "component " + pair_text(a, b) + " beyond truncation degree " +
                                              std::to_string(top_degree()));
  }
  return a * (top_degree() + 1) + b;
}

const Matrix& TruncatedGradedBialgebra::mult(std::size_t a, std::size_t b) const { return mult_[slot(a, b)]; }
const Matrix& TruncatedGradedBialgebra::comult(std::size_t a, std::size_t b) const { return comult_[slot(a, b)]; }
const Matrix& TruncatedGradedBialgebra::braid(std::size_t a, std::size_t b) const { return braid_[slot(a, b)]; }

namespace {
void replace(Matrix& slot, Matrix m, const std::string& what) {
  if (m.rows() != slot.rows() || m.cols() != slot.cols()) {
    throw Error(Errc::shape_mismatch, what + " must be " + std::to_string(slot.rows()) + "x" +
                                          std::to_string(slot.cols()) + ", got " + std::to_string(m.rows()) +
                                          "x" + std::to_string(m.cols()));
  }
  if (!(m.field() == slot.field())) throw Error(Errc::field_mismatch, what + " over the wrong field");
  slot = std::move(m);
}
}  // namespace

void TruncatedGradedBialgebra::set_mult(std::size_t a, std::size_t b, Matrix m) {
  replace(mult_[slot(a, b)], std::move(m), "m" + pair_text(a, b));
}
void TruncatedGradedBialgebra::set_comult(std::size_t a, std::size_t b, Matrix m) {
  replace(comult_[slot(a, b)], std::move(m), "delta" + pair_text(a, b));
}
void TruncatedGradedBialgebra::set_braid(std::size_t a, std::size_t b, Matrix m) {
  replace(braid_[slot(a, b)], std::move(m), "c" + pair_text(a, b));
}
void TruncatedGradedBialgebra::set_unit(Matrix m) { replace(unit_, std::move(m), "unit"); }
void TruncatedGradedBialgebra::set_counit(Matrix m) { replace(counit_, std::move(m), "counit"); }

void TruncatedGradedBialgebra::use_flip_braiding() {
  for (std::size_t a = 0; a <= top_degree(); ++a) {
    for (std::size_t b = 0; a + b <= top_degree(); ++b) set_braid(a, b, Matrix::flip(field(), dim(a), dim(b)));
  }
}

CheckReport check_graded_coalgebra_axioms(const TruncatedGradedBialgebra& b) {
  const std::size_t n = b.top_degree();
  std::vector<std::function<std::optional<Failure>()>> inst;
  for (std::size_t x = 0; x <= n; ++x) {
    for (std::size_t y = 0; x + y <= n; ++y) {
      for (std::size_t z = 0; x + y + z <= n; ++z) {
        inst.push_back([&b, x, y, z]() {
          const Matrix lhs = kronecker(b.comult(x, y), id(b, z)) * b.comult(x + y, z);
          const Matrix rhs = kronecker(id(b, x), b.comult(y, z)) * b.comult(x, y + z);
          return compare(lhs, rhs, {x, y, z}, "coassociativity");
        });
      }
    }
  }
  for (std::size_t d = 0; d <= n; ++d) {
    inst.push_back([&b, d]() {
      return compare(kronecker(b.counit(), id(b, d)) * b.comult(0, d), id(b, d), {d}, "left_counit");
    });
    inst.push_back([&b, d]() {
      return compare(kronecker(id(b, d), b.counit()) * b.comult(d, 0), id(b, d), {d}, "right_counit");
    });
  }
  return run_instances("graded_coalgebra_axioms", inst);
}

CheckReport check_graded_algebra_axioms(const TruncatedGradedBialgebra& b) {
  const std::size_t n = b.top_degree();
  std::vector<std::function<std::optional<Failure>()>> inst;
  for (std::size_t x = 0; x <= n; ++x) {
    for (std::size_t y = 0; x + y <= n; ++y) {
      for (std::size_t z = 0; x + y + z <= n; ++z) {
        inst.push_back([&b, x, y, z]() {
          const Matrix lhs = b.mult(x + y, z) * kronecker(b.mult(x, y), id(b, z));
          const Matrix rhs = b.mult(x, y + z) * kronecker(id(b, x), b.mult(y, z));
          return compare(lhs, rhs, {x, y, z}, "associativity");
        });
      }
    }
  }
  for (std::size_t d = 0; d <= n; ++d) {
    inst.push_back([&b, d]() {
      return compare(b.mult(0, d) * kronecker(b.unit(), id(b, d)), id(b, d), {d}, "left_unit");
    });
    inst.push_back([&b, d]() {
      return compare(b.mult(d, 0) * kronecker(id(b, d), b.unit()), id(b, d), {d}, "right_unit");
    });
  }
  return run_instances("graded_algebra_axioms", inst);
}

CheckReport check_bialgebra_compat(const TruncatedGradedBialgebra& b) {
  const std::size_t n = b.top_degree();
  std::vector<std::function<std::optional<Failure>()>> inst;
  for (std::size_t total = 0; total <= n; ++total) {
    for (std::size_t a = 0; a <= total; ++a) {
      for (std::size_t s = 0; s <= total; ++s) {
        const std::size_t bb = total - a, t = total - s;
        inst.push_back([&b, a, bb, s, t]() {
          const Matrix lhs = b.comult(s, t) * b.mult(a, bb);
          Matrix rhs(b.field(), lhs.rows(), lhs.cols());
          for (std::size_t i = 0; i <= a && i <= s; ++i) {
            const std::size_t j = a - i, u = s - i;
            if (u > bb) continue;
            const std::size_t v = bb - u;
            const Matrix split = kronecker(b.comult(i, j), b.comult(u, v));
            const Matrix twist = kronecker(kronecker(id(b, i), b.braid(j, u)), id(b, v));
            const Matrix join = kronecker(b.mult(i, u), b.mult(j, v));
            rhs += join * (twist * split);
          }
          return compare(lhs, rhs, {a, bb, s, t}, "compatibility");
        });
      }
    }
  }
  inst.push_back([&b]() {
    return compare(b.comult(0, 0) * b.unit(), kronecker(b.unit(), b.unit()), {0}, "comult_unit");
  });
  inst.push_back([&b]() {
    return compare(b.counit() * b.mult(0, 0), kronecker(b.counit(), b.counit()), {0}, "counit_mult");
  });
  inst.push_back([&b]() {
    return compare(b.counit() * b.unit(), Matrix::identity(b.field(), 1), {0}, "counit_unit");
  });
  return run_instances("bialgebra_compat", inst);
}

CheckReport check_strongly_graded(const TruncatedGradedBialgebra& b, GradedSide side) {
  const std::size_t n = b.top_degree();
  std::vector<std::function<std::optional<Failure>()>> inst;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; i + j <= n; ++j) {
      inst.push_back([&b, i, j, side]() -> std::optional<Failure> {
        if (side == GradedSide::coalgebra) {
          const Matrix& d = b.comult(i, j);
          if (is_injective(d)) return std::nullopt;
          const Matrix k = kernel_basis(d);
          const auto pos = k.first_nonzero();
          return Failure{{i, j}, {pos->first, pos->second}, "comult_injective"};
        }
        const Matrix& m = b.mult(i, j);
        if (is_surjective(m)) return std::nullopt;
        return Failure{{i, j}, {rank(m), 0}, "mult_surjective"};
      });
    }
  }
  return run_instances(side == GradedSide::coalgebra ? "strongly_graded_coalgebra"
                                                     : "strongly_graded_algebra",
                       inst);
}

Subobject floor_subobject(const TruncatedGradedBialgebra& b, std::size_t n) {
  Subobject out;
  for (std::size_t d = 0; d <= b.top_degree(); ++d) {
    out.push_back(d < n ? id(b, d) : Matrix(b.field(), b.dim(d), 0));
  }
  return out;
}

Subobject ceiling_subobject(const TruncatedGradedBialgebra& b, std::size_t n) {
  Subobject out;
  for (std::size_t d = 0; d <= b.top_degree(); ++d) {
    out.push_back(d >= n ? id(b, d) : Matrix(b.field(), b.dim(d), 0));
  }
  return out;
}

bool same_subobject(const Subobject& x, const Subobject& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t d = 0; d < x.size(); ++d) {
    if (!same_column_space(x[d], y[d])) return false;
  }
  return true;
}

std::vector<std::size_t> subobject_dims(const Subobject& x) {
  std::vector<std::size_t> out;
  for (const auto& m : x) out.push_back(rank(m));
  return out;
}

Matrix iterated_comult(const TruncatedGradedBialgebra& b, const std::vector<std::size_t>& parts) {
  if (parts.empty()) throw Error(Errc::invalid_argument, "empty composition");
  if (parts.size() == 1) return id(b, parts[0]);
  const std::vector<std::size_t> rest(parts.begin() + 1, parts.end());
  const std::size_t rest_deg = std::accumulate(rest.begin(), rest.end(), std::size_t{0});
  return kronecker(id(b, parts[0]), iterated_comult(b, rest)) * b.comult(parts[0], rest_deg);
}

Matrix iterated_mult(const TruncatedGradedBialgebra& b, const std::vector<std::size_t>& parts) {
  if (parts.empty()) throw Error(Errc::invalid_argument, "empty composition");
  if (parts.size() == 1) return id(b, parts[0]);
  const std::vector<std::size_t> rest(parts.begin() + 1, parts.end());
  const std::size_t rest_deg = std::accumulate(rest.begin(), rest.end(), std::size_t{0});
  return b.mult(parts[0], rest_deg) * kronecker(id(b, parts[0]), iterated_mult(b, rest));
}

std::vector<std::vector<std::size_t>> positive_compositions(std::size_t d, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  if (d < k) return out;
  for (std::size_t first = 1; first + (k - 1) <= d; ++first) {
    for (auto& tail : positive_compositions(d - first, k - 1)) {
      tail.insert(tail.begin(), first);
      out.push_back(std::move(tail));
    }
  }
  return out;
}

Subobject wedge(const TruncatedGradedBialgebra& b, const Subobject& x, const Subobject& y) {
  const std::size_t n = b.top_degree();
  if (x.size() != n + 1 || y.size() != n + 1) throw Error(Errc::shape_mismatch, "subobject degree count");
  std::vector<Quotient> px, py;
  for (std::size_t d = 0; d <= n; ++d) {
    px.push_back(quotient_by(x[d], b.dim(d)));
    py.push_back(quotient_by(y[d], b.dim(d)));
  }
  Subobject out(n + 1);
  parallel::for_each_index(n + 1, [&](std::size_t d) {
    std::vector<Matrix> blocks;
    for (std::size_t a = 0; a <= d; ++a) {
      const Matrix& qa = px[a].projection;
      const Matrix& qb = py[d - a].projection;
      if (qa.rows() == 0 || qb.rows() == 0) continue;
      blocks.push_back(kronecker(qa, qb) * b.comult(a, d - a));
    }
    out[d] = blocks.empty() ? id(b, d) : kernel_basis(vstack(blocks));
  });
  return out;
}

Subobject wedge_power(const TruncatedGradedBialgebra& b, std::size_t n) {
  const std::size_t top = b.top_degree();
  Subobject out(top + 1);
  if (n == 0) {
    for (std::size_t d = 0; d <= top; ++d) out[d] = Matrix(b.field(), b.dim(d), 0);
    return out;
  }
  parallel::for_each_index(top + 1, [&](std::size_t d) {
    std::vector<Matrix> blocks;
    for (const auto& parts : positive_compositions(d, n)) blocks.push_back(iterated_comult(b, parts));
    out[d] = blocks.empty() ? id(b, d) : kernel_basis(vstack(blocks));
  });
  return out;
}

Subobject ideal_power(const TruncatedGradedBialgebra& b, std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "ideal power needs n >= 1");
  const std::size_t top = b.top_degree();
  Subobject out(top + 1);
  parallel::for_each_index(top + 1, [&](std::size_t d) {
    std::vector<Matrix> blocks;
    for (const auto& parts : positive_compositions(d, n)) blocks.push_back(iterated_mult(b, parts));
    out[d] = blocks.empty() ? Matrix(b.field(), b.dim(d), 0) : image_basis(hstack(blocks));
  });
  return out;
}

CheckReport check_graded_morphism(const TruncatedGradedBialgebra& source,
                                  const TruncatedGradedBialgebra& target, const GradedMap& f) {
  const std::size_t n = std::min(source.top_degree(), target.top_degree());
  if (f.components.size() < n + 1) throw Error(Errc::shape_mismatch, "graded map is missing components");
  const auto& fc = f.components;
  std::vector<std::function<std::optional<Failure>()>> inst;
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = 0; a + b <= n; ++b) {
      inst.push_back([&, a, b]() {
        return compare(fc[a + b] * source.mult(a, b), target.mult(a, b) * kronecker(fc[a], fc[b]), {a, b},
                       "mult");
      });
      inst.push_back([&, a, b]() {
        return compare(target.comult(a, b) * fc[a + b], kronecker(fc[a], fc[b]) * source.comult(a, b), {a, b},
                       "comult");
      });
      inst.push_back([&, a, b]() {
        return compare(target.braid(a, b) * kronecker(fc[a], fc[b]), kronecker(fc[b], fc[a]) * source.braid(a, b),
                       {a, b}, "braid");
      });
    }
  }
  inst.push_back([&]() { return compare(fc[0] * source.unit(), target.unit(), {0}, "unit"); });
  inst.push_back([&]() { return compare(target.counit() * fc[0], source.counit(), {0}, "counit"); });
  return run_instances("graded_morphism", inst);
}

ImageBialgebra image_bialgebra(const TruncatedGradedBialgebra& source, const TruncatedGradedBialgebra& target,
                               const GradedMap& f) {
  const CheckReport laws = check_graded_morphism(source, target, f);
  if (!laws.passed()) {
    const Failure& fail = laws.failures.front();
    std::string idx;
    for (std::size_t k = 0; k < fail.indices.size(); ++k) idx += (k ? "," : "") + std::to_string(fail.indices[k]);
    throw Error(Errc::not_graded_bialgebra_morphism,
                "law '" + fail.law + "' fails at component (" + idx + ")", fail.residual_entry);
  }
  const std::size_t n = std::min(source.top_degree(), target.top_degree());
  ImageBialgebra out;
  std::vector<std::size_t> dims;
  for (std::size_t d = 0; d <= n; ++d) {
    out.bases.push_back(image_basis(f.components[d]));
    dims.push_back(out.bases.back().cols());
  }
  TruncatedGradedBialgebra im(target.field(), dims);
  const auto& B = out.bases;
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = 0; a + b <= n; ++b) {
      im.set_mult(a, b, solve(B[a + b], target.mult(a, b) * kronecker(B[a], B[b])));
      im.set_comult(a, b, solve(kronecker(B[a], B[b]), target.comult(a, b) * B[a + b]));
      im.set_braid(a, b, solve(kronecker(B[b], B[a]), target.braid(a, b) * kronecker(B[a], B[b])));
    }
  }
  im.set_unit(solve(B[0], target.unit()));
  im.set_counit(target.counit() * B[0]);
  out.bialgebra = std::move(im);
  return out;
}

}  // namespace braided
