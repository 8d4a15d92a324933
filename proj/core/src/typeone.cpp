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

#include "braided/typeone.hpp"

#include <algorithm>

#include "braided/cotensor_bialgebra.hpp"
#include "braided/error.hpp"
#include "braided/parallel.hpp"
#include "braided/tensor_bialgebra.hpp"

namespace braided {

Matrix symmetrizer_perm_sum(const Braiding& b, std::size_t n) {
  const StrandAlgebra strands(b, n);
  Matrix out(b.field(), strands.size(), strands.size());
  for (const auto& sigma : all_permutations(n)) out += strands.lift(sigma);
  return out;
}

Matrix symmetrizer_via_psi(const Braiding& b, std::size_t n) {
  Matrix f = Matrix::identity(b.field(), 1);
  if (n == 0) return f;
  f = Matrix::identity(b.field(), b.dim());
  const Matrix id = Matrix::identity(b.field(), b.dim());
  for (std::size_t k = 2; k <= n; ++k) f = kronecker(id, f) * unshuffle_component(b, 1, k - 1);
  return f;
}

Matrix symmetrizer_recursive(const Braiding& b, std::size_t n) {
  if (n == 0) return Matrix::identity(b.field(), 1);
  Matrix f = Matrix::identity(b.field(), b.dim());
  const Matrix id = Matrix::identity(b.field(), b.dim());
  for (std::size_t k = 2; k <= n; ++k) {
    const StrandAlgebra strands(b, k);
    // id + c_1 + c_1c_2 + … accumulated as running products.
    Matrix term = Matrix::identity(b.field(), strands.size());
    Matrix sum = term;
    for (std::size_t i = 1; i < k; ++i) {
      term = term * strands.c(i);
      sum += term;
    }
    f = kronecker(id, f) * sum;
  }
  return f;
}

std::string hilbert_text(const std::vector<std::size_t>& dims) {
  std::string out;
  for (std::size_t n = 0; n < dims.size(); ++n) {
    if (dims[n] == 0) continue;
    std::string term;
    if (n == 0 || dims[n] != 1) term = std::to_string(dims[n]);
    if (n >= 1) term += "t";
    if (n >= 2) term += "^" + std::to_string(n);
    out += (out.empty() ? "" : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::vector<std::size_t> relation_degrees(const std::vector<Matrix>& f, std::size_t dim) {
  std::vector<std::size_t> out(f.size(), 0);
  if (f.empty()) return out;
  const FieldSpec field = f.front().field();
  const Matrix id = Matrix::identity(field, dim);
  std::vector<Matrix> kernels(f.size());
  parallel::for_each_index(f.size(), [&](std::size_t n) { kernels[n] = kernel_basis(f[n]); });
  for (std::size_t n = 1; n < f.size(); ++n) {
    const std::size_t ker = kernels[n].cols();
    const Matrix& prev = kernels[n - 1];
    std::size_t generated = 0;
    if (n >= 2 && prev.cols() > 0) generated = rank(hstack(kronecker(id, prev), kronecker(prev, id)));
    out[n] = ker - generated;
  }
  return out;
}

TypeOneResult typeone_truncation(const Braiding& b, std::size_t N) {
  const TruncatedGradedBialgebra t = build_tensor_bialgebra(b, N);
  const TruncatedGradedBialgebra tc = build_cotensor_bialgebra(b, N);
  TypeOneResult out;
  out.symmetrizer.components.resize(N + 1);
  parallel::for_each_index(N + 1, [&](std::size_t n) {
    out.symmetrizer.components[n] = symmetrizer_via_psi(b, n);
  });
  ImageBialgebra im = image_bialgebra(t, tc, out.symmetrizer);
  out.bases = std::move(im.bases);
  out.bialgebra = std::move(im.bialgebra);
  for (const auto& basis : out.bases) out.dims.push_back(basis.cols());
  out.new_relations = relation_degrees(out.symmetrizer.components, b.dim());
  return out;
}

MagnumVerdict magnum_check(const TruncatedGradedBialgebra& b) {
  MagnumVerdict v;
  v.ideal_clause = same_subobject(ideal_power(b, 2), ceiling_subobject(b, 2));
  v.wedge_clause = same_subobject(wedge_power(b, 2), floor_subobject(b, 2));
  return v;
}

bool EquivalenceReport::coalgebra_consistent() const {
  const bool v = comult_all_mono;
  return comult_a1_mono == v && psi_components_mono == v && wedge_equals_floor_all == v &&
         wedge_equals_floor_2 == v;
}

bool EquivalenceReport::algebra_consistent() const {
  const bool v = mult_all_epi;
  return mult_a1_epi == v && phi_components_epi == v && ideal_equals_ceiling_all == v &&
         ideal_equals_ceiling_2 == v;
}

EquivalenceReport equivalence_probe(const TruncatedGradedBialgebra& b) {
  const std::size_t N = b.top_degree();
  EquivalenceReport r;
  r.comult_all_mono = check_strongly_graded(b, GradedSide::coalgebra).passed();
  r.mult_all_epi = check_strongly_graded(b, GradedSide::algebra).passed();

  r.comult_a1_mono = true;
  r.mult_a1_epi = true;
  for (std::size_t a = 0; a + 1 <= N; ++a) {
    r.comult_a1_mono = r.comult_a1_mono && is_injective(b.comult(a, 1));
    r.mult_a1_epi = r.mult_a1_epi && is_surjective(b.mult(a, 1));
  }

  // ψ_n = Δ_{1,…,1} and φ_n = m_{1,…,1}; in degree 0 both are identities.
  r.psi_components_mono = true;
  r.phi_components_epi = true;
  for (std::size_t n = 1; n <= N; ++n) {
    const std::vector<std::size_t> ones(n, 1);
    r.psi_components_mono = r.psi_components_mono && is_injective(iterated_comult(b, ones));
    r.phi_components_epi = r.phi_components_epi && is_surjective(iterated_mult(b, ones));
  }

  r.wedge_equals_floor_all = true;
  r.ideal_equals_ceiling_all = true;
  for (std::size_t n = 1; n <= N + 1; ++n) {
    r.wedge_equals_floor_all =
        r.wedge_equals_floor_all && same_subobject(wedge_power(b, n), floor_subobject(b, n));
    r.ideal_equals_ceiling_all =
        r.ideal_equals_ceiling_all && same_subobject(ideal_power(b, n), ceiling_subobject(b, n));
  }
  r.wedge_equals_floor_2 = same_subobject(wedge_power(b, 2), floor_subobject(b, 2));
  r.ideal_equals_ceiling_2 = same_subobject(ideal_power(b, 2), ceiling_subobject(b, 2));
  return r;
}

}  // namespace braided
