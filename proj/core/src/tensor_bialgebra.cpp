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

#include "braided/tensor_bialgebra.hpp"

#include <utility>
#include <vector>

#include "braided/parallel.hpp"

namespace braided {

Matrix unshuffle_component(const Braiding& b, std::size_t a, std::size_t t) {
  const StrandAlgebra strands(b, a + t);
  Matrix out(b.field(), strands.size(), strands.size());
  for (const auto& sigma : shuffles(a, t)) out += strands.lift(inverse(sigma));
  return out;
}

Matrix block_braiding(const Braiding& b, std::size_t a, std::size_t t) {
  return StrandAlgebra(b, a + t).lift(block_swap(a, t));
}

TruncatedGradedBialgebra build_tensor_bialgebra(const Braiding& b, std::size_t N) {
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= N; ++n) dims.push_back(tensor_power_dim(b.dim(), n));
  TruncatedGradedBialgebra t(b.field(), dims);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a <= N; ++a) {
    for (std::size_t c = 0; a + c <= N; ++c) pairs.emplace_back(a, c);
  }
  std::vector<Matrix> comult(pairs.size()), braid(pairs.size());
  parallel::for_each_index(pairs.size(), [&](std::size_t k) {
    const auto [a, c] = pairs[k];
    comult[k] = unshuffle_component(b, a, c);
    braid[k] = block_braiding(b, a, c);
  });
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [a, c] = pairs[k];
    t.set_mult(a, c, Matrix::identity(b.field(), dims[a + c]));
    t.set_comult(a, c, std::move(comult[k]));
    t.set_braid(a, c, std::move(braid[k]));
  }
  t.set_unit(Matrix::identity(b.field(), 1));
  t.set_counit(Matrix::identity(b.field(), 1));
  return t;
}

}  // namespace braided
