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

#include <cstddef>
#include <vector>

namespace braided {

/// A permutation of {0..n-1}; sigma[i] is the image of i.
using Permutation = std::vector<std::size_t>;

Permutation identity_permutation(std::size_t n);
Permutation inverse(const Permutation& sigma);
/// (a∘b)(i) = a[b[i]].
Permutation compose(const Permutation& a, const Permutation& b);
std::size_t inversion_count(const Permutation& sigma);
bool is_permutation(const Permutation& sigma);

/**
 * A reduced word i_1 … i_k (strand indices 1..n-1) with
 * sigma = s_{i_1} ⋯ s_{i_k}, s_i the transposition of positions i-1 and i.
 * Found by repeatedly removing the leftmost descent on the right.
 */
std::vector<std::size_t> reduced_word(const Permutation& sigma);
/// sigma = s_{i_1} ⋯ s_{i_k}.
Permutation permutation_from_word(std::size_t n, const std::vector<std::size_t>& word);

/// All permutations of n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

/**
 * (a,b)-shuffles: permutations of a+b preserving the relative order of
 * {0..a-1} and of {a..a+b-1}. Enumerated by the lexicographic order of the
 * positions sigma[0] < … < sigma[a-1] of the first block.
 */
std::vector<Permutation> shuffles(std::size_t a, std::size_t b);

/// Exchanges the leading block of length a with the trailing block of length b.
Permutation block_swap(std::size_t a, std::size_t b);

/// Matrix-free description of the tensor-factor permutation on V^{⊗n}:
/// the factor at position i moves to position sigma[i].
/// Returns the image index of the basis tuple with the given index.
std::size_t permute_index(const Permutation& sigma, std::size_t dim, std::size_t index);

}  // namespace braided
