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
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace braided {

/** Error categories raised by the engine. Names mirror the user-facing error kinds. */
enum class Errc {
  division_by_zero,
  field_mismatch,
  zero_parameter,
  not_invertible,
  braid_equation_fails,
  index_out_of_range,
  basis_not_independent,
  not_graded_bialgebra_morphism,
  invalid_group_table,
  axiom_fails,
  syntax_error,
  unknown_name,
  type_error,
  shape_mismatch,
  invalid_argument,
  malformed_input,
};

/** Stable CamelCase name of an error kind, e.g. "DivisionByZero". */
const char* errc_name(Errc code);

/**
 * The single exception type of the library. Some kinds carry a position: a
 * (row, col) residual entry for BraidEquationFails, or a (line, col) source
 * location for parser errors.
 */
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::pair<std::size_t, std::size_t>> position = std::nullopt);

  Errc code() const noexcept { return code_; }
  const std::optional<std::pair<std::size_t, std::size_t>>& position() const noexcept {
    return position_;
  }

 private:
  Errc code_;
  std::optional<std::pair<std::size_t, std::size_t>> position_;
};

}  // namespace braided
