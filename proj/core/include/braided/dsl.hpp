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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braided/field.hpp"
#include "braided/matrix.hpp"

namespace braided::dsl {

/// A tensor word of object names; the empty word is the unit object.
using ObjectWord = std::vector<std::string>;

std::string word_to_string(const ObjectWord& w);

struct GeneratorType {
  ObjectWord domain;
  ObjectWord codomain;
};

/**
 * Declared objects and generators. Object dimensions are optional here; the
 * evaluation environment supplies them. Generators with subscripts are keyed
 * by their printed form, e.g. "c[V,V]".
 */
struct Signature {
  std::map<std::string, std::optional<std::size_t>> objects;
  std::map<std::string, GeneratorType> generators;

  void add_object(const std::string& name, std::optional<std::size_t> dim = std::nullopt);
  /// Throws Errc::unknown_name when the word mentions an undeclared object.
  void add_generator(const std::string& name, ObjectWord domain, ObjectWord codomain);
  bool has_object(const std::string& name) const { return objects.count(name) != 0; }
};

struct SourcePos {
  std::size_t line = 1;
  std::size_t col = 1;
};

struct MorExpr;
using ExprPtr = std::shared_ptr<const MorExpr>;

/**
 * Abstract syntax. `Compose(g, f)` is g∘f, written "g . f". Generator
 * subscripts (c[X,Y]) live in `args`; Id carries its word in `args[0]`.
 */
struct MorExpr {
  enum class Kind { gen, id, tensor, compose };

  Kind kind = Kind::gen;
  std::string name;
  std::vector<ObjectWord> args;
  ExprPtr lhs, rhs;
  SourcePos pos;

  static ExprPtr make_gen(std::string name, std::vector<ObjectWord> args = {}, SourcePos pos = {});
  static ExprPtr make_id(ObjectWord word, SourcePos pos = {});
  static ExprPtr make_tensor(ExprPtr a, ExprPtr b, SourcePos pos = {});
  static ExprPtr make_compose(ExprPtr g, ExprPtr f, SourcePos pos = {});
};

/// Structural equality; source positions are ignored.
bool same_expr(const MorExpr& a, const MorExpr& b);

/// Signature key of a generator occurrence: "m" or "c[H,V]".
std::string generator_key(const MorExpr& gen);

/**
 * expr := tensor ('.' tensor)*; tensor := atom ('*' atom)*;
 * atom := '(' expr ')' | 'id' '[' word ']' | name ('[' word (',' word)* ']')?
 * Both operators associate to the left. c[X,Y] and cinv[X,Y] are always
 * available. Throws SyntaxError or UnknownName with a (line, col) position.
 */
ExprPtr parse_expr(std::string_view src, const Signature& sig);

/// Minimal parentheses; parse_expr(print_expr(e)) is structurally e.
std::string print_expr(const MorExpr& e);

/// Domain and codomain. Throws Errc::type_error naming the path of the
/// offending subexpression ("root", "root.lhs", ...).
std::pair<ObjectWord, ObjectWord> typecheck(const MorExpr& e, const Signature& sig);

/** Object dimensions and generator matrices for evaluation. */
struct Environment {
  FieldSpec field;
  std::map<std::string, std::size_t> object_dims;
  std::map<std::string, Matrix> generators;

  std::size_t word_dim(const ObjectWord& w) const;
};

/**
 * Exact value of e. Unbound c[X,Y] is the flip X⊗Y → Y⊗X and unbound
 * cinv[X,Y] is the flip Y⊗X → X⊗Y. Throws ShapeMismatch when a bound matrix
 * disagrees with its declared type, UnknownName for unbound names.
 */
Matrix evaluate(const MorExpr& e, const Signature& sig, const Environment& env);

/** A parsed .mor file. Each let may use earlier lets like generators. */
struct MorFile {
  struct Let {
    std::string name;
    ExprPtr expr;
    std::size_t line = 0;
  };
  Signature signature;
  std::vector<Let> lets;
};

/// Reads "object X : n", "gen g : A B -> C" and "let x = expr" lines; "--"
/// starts a comment. `base` is extended by the preamble.
MorFile parse_mor(std::string_view text, Signature base = {});

/// Evaluates every let in order. Object dimensions declared in the file are
/// used when the environment does not bind them.
std::vector<std::pair<std::string, Matrix>> evaluate_mor(const MorFile& file, Environment env);

}  // namespace braided::dsl
