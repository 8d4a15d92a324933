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
#include <functional>

namespace braided::parallel {

/// Caps the worker count used by for_each_index. 0 restores the default
/// (hardware concurrency, or BRAIDED_FORGE_THREADS when set).
void set_thread_cap(std::size_t cap);
std::size_t thread_cap();

/**
 * Runs fn(i) for i in [0, count). Workers claim indices dynamically; callers
 * write results into per-index slots so output does not depend on scheduling.
 * The first exception thrown (lowest index) is rethrown after all workers
 * finish.
 */
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace braided::parallel
