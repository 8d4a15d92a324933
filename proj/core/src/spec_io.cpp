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

#include "braided/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "braided/error.hpp"

namespace braided::io {

namespace {

[[noreturn]] void malformed(const std::string& msg) { throw Error(Errc::malformed_input, msg); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) malformed(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::size_t to_size(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    malformed(where + ": expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::vector<std::size_t> size_list(const Json& j, const std::string& where) {
  if (!j.is_array()) malformed(where + ": expected an array");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(to_size(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::string scalar_text(const Json& x, const std::string& where) {
  if (x.is_string()) return x.get<std::string>();
  if (x.is_number_integer()) return x.dump();
  malformed(where + ": matrix entries must be strings or integers");
}

void expect_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& where) {
  if (m.rows() != rows || m.cols() != cols) {
    throw Error(Errc::shape_mismatch, where + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                                          ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

/// Matrices whose row or column count may be zero are read against the expected shape.
Matrix shaped_matrix(const Json& j, FieldSpec field, std::size_t rows, std::size_t cols, const std::string& where) {
  if (rows == 0 || cols == 0) {
    if (!j.is_array()) malformed(where + ": expected an array of rows");
    for (const auto& r : j) {
      if (!r.is_array() || !r.empty()) throw Error(Errc::shape_mismatch, where + ": expected an empty matrix");
    }
    if (j.size() != rows && !(rows > 0 && j.empty())) {
      throw Error(Errc::shape_mismatch, where + ": expected " + std::to_string(rows) + " empty rows");
    }
    return Matrix(field, rows, cols);
  }
  Matrix m = matrix_from_json(j, field, where);
  expect_shape(m, rows, cols, where);
  return m;
}

void read_components(const Json& list, const char* what, const std::string& where, const Spec& s,
                     TruncatedGradedBialgebra& b) {
  if (!list.is_array()) malformed(where + "." + what + ": expected an array");
  const std::size_t N = b.top_degree();
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = where + "." + what + "[" + std::to_string(i) + "]";
    const std::size_t a = to_size(member(list[i], "a", at), at + ".a");
    const std::size_t c = to_size(member(list[i], "b", at), at + ".b");
    if (a + c > N) throw Error(Errc::index_out_of_range, at + ": degree " + std::to_string(a + c) + " exceeds N");
    const std::size_t da = b.dim(a), dc = b.dim(c), ds = b.dim(a + c);
    const Json& mj = member(list[i], "matrix", at);
    const std::string w = std::string(what);
    if (w == "mult") b.set_mult(a, c, shaped_matrix(mj, s.field, ds, da * dc, at));
    if (w == "comult") b.set_comult(a, c, shaped_matrix(mj, s.field, da * dc, ds, at));
    if (w == "braid") b.set_braid(a, c, shaped_matrix(mj, s.field, dc * da, da * dc, at));
  }
}

void parse_graded(const Json& g, Spec& s) {
  const std::string where = "graded_bialgebra";
  const auto dims = size_list(member(g, "dims", where), where + ".dims");
  if (dims.empty()) malformed(where + ".dims: at least degree 0 is required");
  TruncatedGradedBialgebra b(s.field, dims);
  const std::size_t N = b.top_degree();
  // With a one-dimensional degree 0 the unit laws force these components.
  if (dims[0] == 1) {
    for (std::size_t n = 0; n <= N; ++n) {
      const Matrix id = Matrix::identity(s.field, dims[n]);
      b.set_mult(0, n, id);
      b.set_mult(n, 0, id);
      b.set_comult(0, n, id);
      b.set_comult(n, 0, id);
    }
    b.set_unit(Matrix::identity(s.field, 1));
    b.set_counit(Matrix::identity(s.field, 1));
  }
  b.use_flip_braiding();
  for (const char* what : {"mult", "comult", "braid"}) {
    if (g.contains(what)) read_components(g.at(what), what, where, s, b);
  }
  if (g.contains("unit")) b.set_unit(shaped_matrix(g.at("unit"), s.field, dims[0], 1, where + ".unit"));
  if (g.contains("counit")) b.set_counit(shaped_matrix(g.at("counit"), s.field, 1, dims[0], where + ".counit"));
  s.bialgebra = std::move(b);
}

void parse_yd(const Json& br, Spec& s) {
  const std::string where = "braiding";
  const Json& group = member(br, "group", where);
  const std::size_t order = to_size(member(group, "order", where + ".group"), where + ".group.order");
  const Json& table = member(group, "table", where + ".group");
  if (!table.is_array() || table.size() != order) malformed(where + ".group.table: expected " + std::to_string(order) + " rows");
  for (std::size_t i = 0; i < order; ++i) {
    s.group_table.push_back(size_list(table[i], where + ".group.table[" + std::to_string(i) + "]"));
  }
  s.degrees = size_list(member(br, "degrees", where), where + ".degrees");
  if (s.degrees.size() != s.space.dim) {
    throw Error(Errc::shape_mismatch, where + ".degrees: expected one entry per basis vector");
  }
  const Json& act = member(br, "action", where);
  if (!act.is_array() || act.size() != order) {
    throw Error(Errc::shape_mismatch, where + ".action: expected one matrix per group element");
  }
  for (std::size_t g = 0; g < order; ++g) {
    s.actions.push_back(
        shaped_matrix(act[g], s.field, s.space.dim, s.space.dim, where + ".action[" + std::to_string(g) + "]"));
  }
}

}  // namespace

const char* kind_name(Spec::Kind k) {
  switch (k) {
    case Spec::Kind::diagonal: return "diagonal";
    case Spec::Kind::matrix: return "matrix";
    case Spec::Kind::yd: return "yd";
    case Spec::Kind::graded_bialgebra: return "graded_bialgebra";
  }
  return "?";
}

Matrix matrix_from_json(const Json& j, FieldSpec field, const std::string& where) {
  if (!j.is_array()) malformed(where + ": expected an array of rows");
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) malformed(where + ": row " + std::to_string(i) + " is not an array");
    std::vector<std::string> row;
    for (const auto& x : j[i]) row.push_back(scalar_text(x, where));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(Errc::shape_mismatch, where + ": ragged matrix rows");
    }
    rows.push_back(std::move(row));
  }
  return Matrix::from_strings(field, rows);
}

Spec parse_spec(const Json& j, std::optional<FieldSpec> field_override) {
  if (!j.is_object()) malformed("spec: expected a JSON object");
  Spec s;
  const Json& f = member(j, "field", "spec");
  if (!f.is_string()) malformed("spec.field: expected a string");
  s.field = field_override ? *field_override : parse_field(f.get<std::string>());
  if (j.contains("name")) {
    if (!j.at("name").is_string()) malformed("spec.name: expected a string");
    s.name = j.at("name").get<std::string>();
  }
  if (j.contains("graded_bialgebra")) {
    s.kind = Spec::Kind::graded_bialgebra;
    parse_graded(j.at("graded_bialgebra"), s);
    return s;
  }
  const Json& space = member(j, "space", "spec");
  const std::size_t dim = to_size(member(space, "dim", "space"), "space.dim");
  std::vector<std::string> labels;
  if (space.contains("labels")) {
    const Json& l = space.at("labels");
    if (!l.is_array()) malformed("space.labels: expected an array");
    for (const auto& x : l) {
      if (!x.is_string()) malformed("space.labels: expected strings");
      labels.push_back(x.get<std::string>());
    }
  }
  s.space = BasedSpace::make(s.field, dim, std::move(labels));
  const Json& br = member(j, "braiding", "spec");
  const Json& kind = member(br, "kind", "braiding");
  if (!kind.is_string()) malformed("braiding.kind: expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "diagonal") {
    s.kind = Spec::Kind::diagonal;
    s.data = shaped_matrix(member(br, "q", "braiding"), s.field, dim, dim, "braiding.q");
  } else if (k == "matrix") {
    s.kind = Spec::Kind::matrix;
    s.data = shaped_matrix(member(br, "c", "braiding"), s.field, dim * dim, dim * dim, "braiding.c");
  } else if (k == "yd") {
    s.kind = Spec::Kind::yd;
    parse_yd(br, s);
  } else {
    malformed("braiding.kind: expected \"diagonal\", \"matrix\" or \"yd\", got \"" + k + "\"");
  }
  return s;
}

Spec parse_spec_text(std::string_view text, std::optional<FieldSpec> field_override) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  return parse_spec(j, field_override);
}

Spec load_spec_file(const std::string& path, std::optional<FieldSpec> field_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str(), field_override);
}

Braiding build_braiding(const Spec& s) {
  switch (s.kind) {
    case Spec::Kind::diagonal: return braiding_from_diagonal(s.data, s.space);
    case Spec::Kind::matrix: return braiding_from_matrix(s.data, s.space);
    case Spec::Kind::yd: return braiding_from_yd(build_yd(s), s.space.labels);
    case Spec::Kind::graded_bialgebra: break;
  }
  throw Error(Errc::invalid_argument, "a graded_bialgebra spec has no braided vector space");
}

FinHopf build_hopf(const Spec& s) {
  if (s.kind != Spec::Kind::yd) throw Error(Errc::invalid_argument, "only yd specs carry a group");
  return group_algebra(s.group_table, s.field);
}

YDModule build_yd(const Spec& s) { return yd_from_group_data(build_hopf(s), s.degrees, s.actions); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.to_strings()) rows.push_back(r);
  return rows;
}

Json to_json(const CheckReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"indices", f.indices},
                            {"residual_entry", {f.residual_entry.first, f.residual_entry.second}},
                            {"law", f.law}});
  }
  return Json{{"check", r.check}, {"instances", r.instances}, {"passed", r.passed()}, {"failures", failures}};
}

Json to_json(const TypeOneResult& r) {
  Json rel = Json::object();
  for (std::size_t n = 0; n < r.new_relations.size(); ++n) {
    if (r.new_relations[n] != 0) rel[std::to_string(n)] = r.new_relations[n];
  }
  return Json{{"dims", r.dims}, {"new_relations", rel}, {"hilbert", hilbert_text(r.dims)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace braided::io
