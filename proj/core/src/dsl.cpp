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

#include "braided/dsl.hpp"

#include <cctype>
#include <sstream>

#include "braided/error.hpp"

namespace braided::dsl {

std::string word_to_string(const ObjectWord& w) {
  std::string out;
  for (const auto& x : w) {
    if (!out.empty()) out += ' ';
    out += x;
  }
  return out.empty() ? "1" : out;
}

void Signature::add_object(const std::string& name, std::optional<std::size_t> dim) {
  objects[name] = dim;
}

void Signature::add_generator(const std::string& name, ObjectWord domain, ObjectWord codomain) {
  for (const auto* w : {&domain, &codomain}) {
    for (const auto& x : *w) {
      if (!has_object(x)) throw Error(Errc::unknown_name, "object '" + x + "' in the type of '" + name + "'");
    }
  }
  generators[name] = GeneratorType{std::move(domain), std::move(codomain)};
}

ExprPtr MorExpr::make_gen(std::string name, std::vector<ObjectWord> args, SourcePos pos) {
  auto e = std::make_shared<MorExpr>();
  e->kind = Kind::gen;
  e->name = std::move(name);
  e->args = std::move(args);
  e->pos = pos;
  return e;
}

ExprPtr MorExpr::make_id(ObjectWord word, SourcePos pos) {
  auto e = std::make_shared<MorExpr>();
  e->kind = Kind::id;
  e->name = "id";
  e->args = {std::move(word)};
  e->pos = pos;
  return e;
}

ExprPtr MorExpr::make_tensor(ExprPtr a, ExprPtr b, SourcePos pos) {
  auto e = std::make_shared<MorExpr>();
  e->kind = Kind::tensor;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  e->pos = pos;
  return e;
}

ExprPtr MorExpr::make_compose(ExprPtr g, ExprPtr f, SourcePos pos) {
  auto e = std::make_shared<MorExpr>();
  e->kind = Kind::compose;
  e->lhs = std::move(g);
  e->rhs = std::move(f);
  e->pos = pos;
  return e;
}

bool same_expr(const MorExpr& a, const MorExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case MorExpr::Kind::gen:
    case MorExpr::Kind::id:
      return a.name == b.name && a.args == b.args;
    case MorExpr::Kind::tensor:
    case MorExpr::Kind::compose:
      return same_expr(*a.lhs, *b.lhs) && same_expr(*a.rhs, *b.rhs);
  }
  return false;
}

namespace {

std::string args_text(const std::vector<ObjectWord>& args) {
  std::string out = "[";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    for (std::size_t k = 0; k < args[i].size(); ++k) {
      if (k) out += ' ';
      out += args[i][k];
    }
  }
  return out + "]";
}

bool is_braiding(const std::string& name) { return name == "c" || name == "cinv"; }

}  // namespace

std::string generator_key(const MorExpr& gen) {
  return gen.args.empty() ? gen.name : gen.name + args_text(gen.args);
}

// ---------------------------------------------------------------- lexer

namespace {

enum class Tok { ident, dot, star, lparen, rparen, lbracket, rbracket, comma, end };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::ident: return "a name";
    case Tok::dot: return "'.'";
    case Tok::star: return "'*'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::comma: return "','";
    case Tok::end: return "end of input";
  }
  return "?";
}

Error syntax_error(const std::string& msg, SourcePos pos) {
  return Error(Errc::syntax_error,
               msg + " at line " + std::to_string(pos.line) + ", column " + std::to_string(pos.col),
               std::make_pair(pos.line, pos.col));
}

std::vector<Token> tokenize(std::string_view src, SourcePos start) {
  std::vector<Token> out;
  SourcePos pos = start;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++pos.col;
      }
    }
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    if (src.substr(i, 2) == "--") {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const SourcePos at = pos;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(src.substr(i, j - i)), at});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (ch) {
      case '.': kind = Tok::dot; break;
      case '*': kind = Tok::star; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case '[': kind = Tok::lbracket; break;
      case ']': kind = Tok::rbracket; break;
      case ',': kind = Tok::comma; break;
      default:
        throw syntax_error(std::string("unexpected character '") + ch + "'", at);
    }
    out.push_back({kind, std::string(1, ch), at});
    advance(1);
  }
  out.push_back({Tok::end, "", pos});
  return out;
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  Parser(std::vector<Token> toks, const Signature& sig) : toks_(std::move(toks)), sig_(sig) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (peek().kind != Tok::end) throw syntax_error("expected '.', '*' or end of input", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }
  Token expect(Tok kind) {
    if (peek().kind != kind) {
      const std::string got = peek().kind == Tok::end ? "end of input" : "'" + peek().text + "'";
      throw syntax_error(std::string("expected ") + tok_name(kind) + ", found " + got, peek().pos);
    }
    return take();
  }

  ExprPtr expr() {
    ExprPtr e = tensor();
    while (peek().kind == Tok::dot) {
      const SourcePos at = take().pos;
      e = MorExpr::make_compose(e, tensor(), at);
    }
    return e;
  }

  ExprPtr tensor() {
    ExprPtr e = atom();
    while (peek().kind == Tok::star) {
      const SourcePos at = take().pos;
      e = MorExpr::make_tensor(e, atom(), at);
    }
    return e;
  }

  ObjectWord word() {
    ObjectWord w;
    while (peek().kind == Tok::ident) {
      const Token t = take();
      if (!sig_.has_object(t.text)) {
        throw Error(Errc::unknown_name,
                    "unknown object '" + t.text + "' at line " + std::to_string(t.pos.line) + ", column " +
                        std::to_string(t.pos.col),
                    std::make_pair(t.pos.line, t.pos.col));
      }
      w.push_back(t.text);
    }
    return w;
  }

  ExprPtr atom() {
    if (peek().kind == Tok::lparen) {
      take();
      ExprPtr e = expr();
      expect(Tok::rparen);
      return e;
    }
    const Token name = expect(Tok::ident);
    if (name.text == "id") {
      expect(Tok::lbracket);
      ObjectWord w = word();
      expect(Tok::rbracket);
      return MorExpr::make_id(std::move(w), name.pos);
    }
    std::vector<ObjectWord> args;
    if (peek().kind == Tok::lbracket) {
      take();
      args.push_back(word());
      while (peek().kind == Tok::comma) {
        take();
        args.push_back(word());
      }
      expect(Tok::rbracket);
    }
    ExprPtr g = MorExpr::make_gen(name.text, std::move(args), name.pos);
    const bool builtin = is_braiding(g->name) && g->args.size() == 2;
    if (!builtin && sig_.generators.count(generator_key(*g)) == 0) {
      throw Error(Errc::unknown_name,
                  "unknown generator '" + generator_key(*g) + "' at line " + std::to_string(name.pos.line) +
                      ", column " + std::to_string(name.pos.col),
                  std::make_pair(name.pos.line, name.pos.col));
    }
    return g;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  const Signature& sig_;
};

ExprPtr parse_at(std::string_view src, const Signature& sig, SourcePos start) {
  return Parser(tokenize(src, start), sig).parse_all();
}

}  // namespace

ExprPtr parse_expr(std::string_view src, const Signature& sig) { return parse_at(src, sig, SourcePos{}); }

// ---------------------------------------------------------------- printer

namespace {

void print_into(const MorExpr& e, std::string& out) {
  switch (e.kind) {
    case MorExpr::Kind::gen:
      out += generator_key(e);
      return;
    case MorExpr::Kind::id:
      out += "id" + args_text(e.args);
      return;
    case MorExpr::Kind::tensor: {
      // A compose operand needs parentheses; so does a right tensor operand.
      const bool wrap_l = e.lhs->kind == MorExpr::Kind::compose;
      const bool wrap_r = e.rhs->kind == MorExpr::Kind::compose || e.rhs->kind == MorExpr::Kind::tensor;
      if (wrap_l) out += '(';
      print_into(*e.lhs, out);
      if (wrap_l) out += ')';
      out += " * ";
      if (wrap_r) out += '(';
      print_into(*e.rhs, out);
      if (wrap_r) out += ')';
      return;
    }
    case MorExpr::Kind::compose: {
      const bool wrap_r = e.rhs->kind == MorExpr::Kind::compose;
      print_into(*e.lhs, out);
      out += " . ";
      if (wrap_r) out += '(';
      print_into(*e.rhs, out);
      if (wrap_r) out += ')';
      return;
    }
  }
}

}  // namespace

std::string print_expr(const MorExpr& e) {
  std::string out;
  print_into(e, out);
  return out;
}

// ---------------------------------------------------------------- types

namespace {

ObjectWord concat(ObjectWord a, const ObjectWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::pair<ObjectWord, ObjectWord> type_of(const MorExpr& e, const Signature& sig, const std::string& path) {
  switch (e.kind) {
    case MorExpr::Kind::id:
      return {e.args.at(0), e.args.at(0)};
    case MorExpr::Kind::gen: {
      const auto it = sig.generators.find(generator_key(e));
      if (it != sig.generators.end()) return {it->second.domain, it->second.codomain};
      if (is_braiding(e.name) && e.args.size() == 2) {
        ObjectWord xy = concat(e.args[0], e.args[1]), yx = concat(e.args[1], e.args[0]);
        if (e.name == "c") return {xy, yx};
        return {yx, xy};
      }
      throw Error(Errc::unknown_name, "unknown generator '" + generator_key(e) + "'",
                  std::make_pair(e.pos.line, e.pos.col));
    }
    case MorExpr::Kind::tensor: {
      auto [da, ca] = type_of(*e.lhs, sig, path + ".lhs");
      auto [db, cb] = type_of(*e.rhs, sig, path + ".rhs");
      return {concat(std::move(da), db), concat(std::move(ca), cb)};
    }
    case MorExpr::Kind::compose: {
      auto [dg, cg] = type_of(*e.lhs, sig, path + ".lhs");
      auto [df, cf] = type_of(*e.rhs, sig, path + ".rhs");
      if (cf != dg) {
        throw Error(Errc::type_error,
                    "at " + path + " (line " + std::to_string(e.pos.line) + ", column " + std::to_string(e.pos.col) +
                        ", `" + print_expr(e) + "`): codomain '" + word_to_string(cf) +
                        "' of the right factor does not match domain '" + word_to_string(dg) + "' of the left factor",
                    std::make_pair(e.pos.line, e.pos.col));
      }
      return {std::move(df), std::move(cg)};
    }
  }
  return {};
}

}  // namespace

std::pair<ObjectWord, ObjectWord> typecheck(const MorExpr& e, const Signature& sig) {
  return type_of(e, sig, "root");
}

// ---------------------------------------------------------------- evaluation

std::size_t Environment::word_dim(const ObjectWord& w) const {
  std::size_t d = 1;
  for (const auto& x : w) {
    const auto it = object_dims.find(x);
    if (it == object_dims.end()) throw Error(Errc::unknown_name, "no dimension bound for object '" + x + "'");
    d *= it->second;
  }
  return d;
}

namespace {

Matrix eval(const MorExpr& e, const Signature& sig, const Environment& env) {
  switch (e.kind) {
    case MorExpr::Kind::id:
      return Matrix::identity(env.field, env.word_dim(e.args.at(0)));
    case MorExpr::Kind::gen: {
      const std::string key = generator_key(e);
      const auto [dom, cod] = typecheck(e, sig);
      const std::size_t rows = env.word_dim(cod), cols = env.word_dim(dom);
      const auto it = env.generators.find(key);
      if (it != env.generators.end()) {
        const Matrix& m = it->second;
        if (m.rows() != rows || m.cols() != cols || m.field() != env.field) {
          throw Error(Errc::shape_mismatch, "generator '" + key + "' is bound to a " + std::to_string(m.rows()) + "x" +
                                                std::to_string(m.cols()) + " matrix over " +
                                                m.field().to_string() + ", expected " + std::to_string(rows) + "x" +
                                                std::to_string(cols) + " over " + env.field.to_string());
        }
        return m;
      }
      if (is_braiding(e.name) && e.args.size() == 2) {
        if (e.name == "cinv") {
          const auto fwd = env.generators.find("c" + key.substr(4));
          if (fwd != env.generators.end()) return inverse(fwd->second);
          return Matrix::flip(env.field, env.word_dim(e.args[1]), env.word_dim(e.args[0]));
        }
        return Matrix::flip(env.field, env.word_dim(e.args[0]), env.word_dim(e.args[1]));
      }
      throw Error(Errc::unknown_name, "generator '" + key + "' is not bound in the environment",
                  std::make_pair(e.pos.line, e.pos.col));
    }
    case MorExpr::Kind::tensor:
      return kronecker(eval(*e.lhs, sig, env), eval(*e.rhs, sig, env));
    case MorExpr::Kind::compose:
      return eval(*e.lhs, sig, env) * eval(*e.rhs, sig, env);
  }
  return {};
}

}  // namespace

Matrix evaluate(const MorExpr& e, const Signature& sig, const Environment& env) {
  typecheck(e, sig);
  return eval(e, sig, env);
}

// ---------------------------------------------------------------- .mor files

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

bool is_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char ch : s) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  }
  return true;
}

ObjectWord split_word(const std::string& text, const Signature& sig, std::size_t line) {
  ObjectWord w;
  std::istringstream in(text);
  std::string x;
  while (in >> x) {
    if (!sig.has_object(x)) {
      throw Error(Errc::unknown_name, "unknown object '" + x + "' on line " + std::to_string(line),
                  std::make_pair(line, std::size_t{1}));
    }
    w.push_back(x);
  }
  return w;
}

}  // namespace

MorFile parse_mor(std::string_view text, Signature base) {
  MorFile file;
  file.signature = std::move(base);
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    std::string_view body = raw;
    if (const auto c = body.find("--"); c != std::string_view::npos) body = body.substr(0, c);
    const std::string line = trim(body);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const SourcePos at{line_no, raw.find_first_not_of(" \t") + 1};
    std::istringstream in(line);
    std::string keyword;
    in >> keyword;
    const std::string rest = trim(line.substr(keyword.size()));
    if (keyword == "object") {
      const auto colon = rest.find(':');
      const std::string name = trim(rest.substr(0, colon));
      if (!is_ident(name)) throw syntax_error("bad object name '" + name + "'", at);
      std::optional<std::size_t> dim;
      if (colon != std::string::npos) {
        const std::string d = trim(rest.substr(colon + 1));
        if (d.empty() || d.find_first_not_of("0123456789") != std::string::npos) {
          throw syntax_error("object dimension must be a non-negative integer", at);
        }
        dim = std::stoul(d);
      }
      file.signature.add_object(name, dim);
    } else if (keyword == "gen") {
      const auto colon = rest.find(':');
      const auto arrow = rest.find("->");
      if (colon == std::string::npos || arrow == std::string::npos || arrow < colon) {
        throw syntax_error("expected 'gen name : A B -> C'", at);
      }
      const std::string name = trim(rest.substr(0, colon));
      if (!is_ident(name) || name == "id") throw syntax_error("bad generator name '" + name + "'", at);
      file.signature.add_generator(name, split_word(rest.substr(colon + 1, arrow - colon - 1), file.signature, line_no),
                                   split_word(rest.substr(arrow + 2), file.signature, line_no));
    } else if (keyword == "let") {
      const auto eq = rest.find('=');
      if (eq == std::string::npos) throw syntax_error("expected 'let name = expr'", at);
      const std::string name = trim(rest.substr(0, eq));
      if (!is_ident(name) || name == "id") throw syntax_error("bad let name '" + name + "'", at);
      const std::size_t eq_raw = body.find('=');
      ExprPtr e = parse_at(body.substr(eq_raw + 1), file.signature, SourcePos{line_no, eq_raw + 2});
      auto [dom, cod] = typecheck(*e, file.signature);
      file.signature.add_generator(name, std::move(dom), std::move(cod));
      file.lets.push_back(MorFile::Let{name, std::move(e), line_no});
    } else {
      throw syntax_error("expected 'object', 'gen' or 'let'", at);
    }
    if (end == text.size()) break;
  }
  return file;
}

std::vector<std::pair<std::string, Matrix>> evaluate_mor(const MorFile& file, Environment env) {
  for (const auto& [name, dim] : file.signature.objects) {
    if (dim && env.object_dims.count(name) == 0) env.object_dims[name] = *dim;
  }
  std::vector<std::pair<std::string, Matrix>> out;
  for (const auto& let : file.lets) {
    Matrix m = evaluate(*let.expr, file.signature, env);
    env.generators[let.name] = m;
    out.emplace_back(let.name, std::move(m));
  }
  return out;
}

}  // namespace braided::dsl
