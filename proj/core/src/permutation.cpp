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

#include "braided/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "braided/error.hpp"

namespace braided {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation inverse(const Permutation& sigma) {
  Permutation inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inv[sigma[i]] = i;
  return inv;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(Errc::shape_mismatch, "composing permutations of different size");
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

std::size_t inversion_count(const Permutation& sigma) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = i + 1; j < sigma.size(); ++j) count += sigma[i] > sigma[j];
  }
  return count;
}

bool is_permutation(const Permutation& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t v : sigma) {
    if (v >= sigma.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<std::size_t> reduced_word(const Permutation& sigma) {
  if (!is_permutation(sigma)) throw Error(Errc::invalid_argument, "not a permutation");
  Permutation p = sigma;
  std::vector<std::size_t> peeled;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < p.size() && p[i] < p[i + 1]) ++i;
    if (i + 1 >= p.size()) break;
    // p = p' s_{i+1} where p' = p s_{i+1} has one inversion fewer.
    std::swap(p[i], p[i + 1]);
    peeled.push_back(i + 1);
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

Permutation permutation_from_word(std::size_t n, const std::vector<std::size_t>& word) {
  Permutation p = identity_permutation(n);
  for (std::size_t s : word) {
    if (s == 0 || s >= n) throw Error(Errc::index_out_of_range, "strand index out of range");
    // p ← p s: precomposition swaps the entries at positions s-1 and s.
    std::swap(p[s - 1], p[s]);
  }
  return p;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Permutation> shuffles(std::size_t a, std::size_t b) {
  const std::size_t n = a + b;
  std::vector<Permutation> out;
  std::vector<bool> chosen(n, false);
  std::fill(chosen.begin(), chosen.begin() + a, true);
  // prev_permutation on a true-first mask visits subsets in lexicographic
  // order of their sorted positions.
  do {
    Permutation sigma(n);
    std::size_t first = 0, second = a;
    for (std::size_t pos = 0; pos < n; ++pos) {
      if (chosen[pos]) {
        sigma[first++] = pos;
      } else {
        sigma[second++] = pos;
      }
    }
    out.push_back(std::move(sigma));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return out;
}

Permutation block_swap(std::size_t a, std::size_t b) {
  Permutation p(a + b);
  for (std::size_t i = 0; i < a; ++i) p[i] = b + i;
  for (std::size_t j = 0; j < b; ++j) p[a + j] = j;
  return p;
}

std::size_t permute_index(const Permutation& sigma, std::size_t dim, std::size_t index) {
  const std::size_t n = sigma.size();
  std::vector<std::size_t> digits(n), moved(n);
  for (std::size_t k = n; k-- > 0;) {
    digits[k] = index % dim;
    index /= dim;
  }
  for (std::size_t k = 0; k < n; ++k) moved[sigma[k]] = digits[k];
  std::size_t out = 0;
  for (std::size_t k = 0; k < n; ++k) out = out * dim + moved[k];
  return out;
}

}  // namespace braided
