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
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "braided/braided_space.hpp"
#include "braided/graded.hpp"
#include "braided/hopf.hpp"
#include "braided/typeone.hpp"

namespace braided::io {

using Json = nlohmann::ordered_json;

/**
 * A parsed input file. Parsing only checks structure and shapes (errors are
 * MalformedInput, ShapeMismatch, ...); the mathematical validation happens in
 * the build_* functions.
 */
struct Spec {
  enum class Kind { diagonal, matrix, yd, graded_bialgebra };

  Kind kind = Kind::diagonal;
  FieldSpec field;
  std::string name;
  BasedSpace space;
  /// q for diagonal braidings, c for matrix braidings.
  Matrix data;
  // yd
  std::vector<std::vector<std::size_t>> group_table;
  std::vector<std::size_t> degrees;
  std::vector<Matrix> actions;
  // graded_bialgebra
  TruncatedGradedBialgebra bialgebra;

  bool has_braiding() const { return kind != Kind::graded_bialgebra; }
};

const char* kind_name(Spec::Kind k);

/// `field_override` replaces the file's field before entries are read.
Spec parse_spec(const Json& j, std::optional<FieldSpec> field_override = std::nullopt);
/// Throws Errc::malformed_input for invalid JSON.
Spec parse_spec_text(std::string_view text, std::optional<FieldSpec> field_override = std::nullopt);
Spec load_spec_file(const std::string& path, std::optional<FieldSpec> field_override = std::nullopt);

/// The validated braiding of a diagonal, matrix or yd spec.
Braiding build_braiding(const Spec& s);
/// The group algebra of a yd spec.
FinHopf build_hopf(const Spec& s);
/// The (unchecked) YD module of a yd spec.
YDModule build_yd(const Spec& s);

/// Rows of entries as strings or integers.
Matrix matrix_from_json(const Json& j, FieldSpec field, const std::string& where);
Json to_json(const Matrix& m);
Json to_json(const CheckReport& r);
/// {"dims", "new_relations", "hilbert"}.
Json to_json(const TypeOneResult& r);

/// Canonical two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace braided::io
