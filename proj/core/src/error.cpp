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

#include "braided/error.hpp"

namespace braided {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::zero_parameter: return "ZeroParameter";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::braid_equation_fails: return "BraidEquationFails";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::basis_not_independent: return "BasisNotIndependent";
    case Errc::not_graded_bialgebra_morphism: return "NotGradedBialgebraMorphism";
    case Errc::invalid_group_table: return "InvalidGroupTable";
    case Errc::axiom_fails: return "AxiomFails";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::unknown_name: return "UnknownName";
    case Errc::type_error: return "TypeError";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::malformed_input: return "MalformedInput";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message,
             std::optional<std::pair<std::size_t, std::size_t>> position)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      position_(position) {}

}  // namespace braided
