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

#include "braided/braided_space.hpp"
#include "braided/graded.hpp"

namespace braided {

/// Braided shuffle V^{⊗a}⊗V^{⊗t} → V^{⊗(a+t)}: Σ over (a,t)-shuffles σ of lift(σ).
Matrix shuffle_component(const Braiding& b, std::size_t a, std::size_t t);

/**
 * T^c(V) truncated at degree N: deconcatenation coproduct, quantum shuffle
 * product, u = ε = 1 in degree 0, and block-swap braiding components.
 */
TruncatedGradedBialgebra build_cotensor_bialgebra(const Braiding& b, std::size_t N);

}  // namespace braided
