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

#include <benchmark/benchmark.h>

#include <random>

#include "braided/bosonization.hpp"
#include "braided/typeone.hpp"

using namespace braided;

namespace {

Matrix random_square(FieldSpec f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, static_cast<long>(rng() % 9) - 4);
  return m;
}

Braiding a2_gf7() {
  const FieldSpec f = FieldSpec::prime(7);
  return braiding_from_diagonal(Matrix::from_ints(f, 2, 2, {2, 1, 4, 2}), BasedSpace::make(f, 2));
}

void BM_RrefRational(benchmark::State& state) {
  const Matrix m = random_square(FieldSpec::rational(), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRational)->Arg(16)->Arg(32)->Arg(64);

void BM_RrefPrime(benchmark::State& state) {
  const Matrix m = random_square(FieldSpec::prime(7), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefPrime)->Arg(16)->Arg(64)->Arg(256);

void BM_SymmetrizerRecursive(benchmark::State& state) {
  const Braiding b = a2_gf7();
  for (auto _ : state) benchmark::DoNotOptimize(symmetrizer_recursive(b, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SymmetrizerRecursive)->DenseRange(3, 6);

void BM_SymmetrizerPermSum(benchmark::State& state) {
  const Braiding b = a2_gf7();
  for (auto _ : state) benchmark::DoNotOptimize(symmetrizer_perm_sum(b, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SymmetrizerPermSum)->DenseRange(3, 5);

void BM_TypeOneTruncation(benchmark::State& state) {
  const Braiding b = a2_gf7();
  for (auto _ : state) benchmark::DoNotOptimize(typeone_truncation(b, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_TypeOneTruncation)->DenseRange(3, 6);

void BM_SmashCheck(benchmark::State& state) {
  const FieldSpec f = FieldSpec::prime(7);
  const FinHopf h = group_algebra(cyclic_group(3), f);
  const YDModule v = yd_from_group_data(h, {1}, {Matrix::from_ints(f, 1, 1, {1}), Matrix::from_ints(f, 1, 1, {2}),
                                                 Matrix::from_ints(f, 1, 1, {4})});
  for (auto _ : state) benchmark::DoNotOptimize(typeone_smash_check(v, 4));
}
BENCHMARK(BM_SmashCheck);

}  // namespace

BENCHMARK_MAIN();
