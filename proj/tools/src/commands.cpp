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

#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "braided/bosonization.hpp"
#include "braided/cotensor_bialgebra.hpp"
#include "braided/dsl.hpp"
#include "braided/dsl_builtins.hpp"
#include "braided/relative.hpp"
#include "braided/tensor_bialgebra.hpp"
#include "braided/typeone.hpp"

namespace braided::cli {

using io::Json;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::zero_parameter:
    case Errc::not_invertible:
    case Errc::braid_equation_fails:
    case Errc::basis_not_independent:
    case Errc::not_graded_bialgebra_morphism:
    case Errc::invalid_group_table:
    case Errc::axiom_fails:
      return kMathFailure;
    default:
      return kInputError;
  }
}

namespace {

Json error_json(const Error& e) {
  Json j{{"kind", errc_name(e.code())}, {"message", e.what()}};
  if (e.position()) j["position"] = {e.position()->first, e.position()->second};
  return j;
}

Json spec_header(const io::Spec& s, const char* command) {
  Json j{{"command", command}, {"field", s.field.to_string()}, {"kind", io::kind_name(s.kind)}};
  if (!s.name.empty()) j["name"] = s.name;
  return j;
}

/// Appends a checker report and folds its verdict into `ok`.
void add_report(Json& list, const CheckReport& r, bool& ok) {
  list.push_back(io::to_json(r));
  ok = ok && r.passed();
}

void add_verdict(Json& list, const std::string& name, bool passed, bool& ok, Json detail = Json::object()) {
  Json j{{"check", name}, {"passed", passed}};
  for (auto& [k, v] : detail.items()) j[k] = v;
  list.push_back(std::move(j));
  ok = ok && passed;
}

Json probe_json(const EquivalenceReport& p) {
  return Json{{"comult_all_mono", p.comult_all_mono},
              {"comult_a1_mono", p.comult_a1_mono},
              {"psi_components_mono", p.psi_components_mono},
              {"wedge_equals_floor_all", p.wedge_equals_floor_all},
              {"wedge_equals_floor_2", p.wedge_equals_floor_2},
              {"mult_all_epi", p.mult_all_epi},
              {"mult_a1_epi", p.mult_a1_epi},
              {"phi_components_epi", p.phi_components_epi},
              {"ideal_equals_ceiling_all", p.ideal_equals_ceiling_all},
              {"ideal_equals_ceiling_2", p.ideal_equals_ceiling_2},
              {"coalgebra_consistent", p.coalgebra_consistent()},
              {"algebra_consistent", p.algebra_consistent()}};
}

void add_probe(Json& list, const std::string& name, const TruncatedGradedBialgebra& b, bool& ok) {
  const EquivalenceReport p = equivalence_probe(b);
  add_verdict(list, name, p.coalgebra_consistent() && p.algebra_consistent(), ok, Json{{"verdicts", probe_json(p)}});
}

void add_magnum(Json& list, const std::string& name, const TruncatedGradedBialgebra& b, bool& ok) {
  const MagnumVerdict m = magnum_check(b);
  add_verdict(list, name, m.holds(), ok, Json{{"ideal_clause", m.ideal_clause}, {"wedge_clause", m.wedge_clause}});
}

void add_axioms(Json& list, const std::string& prefix, const TruncatedGradedBialgebra& b, bool& ok) {
  CheckReport r = check_graded_coalgebra_axioms(b);
  r.check = prefix + "." + r.check;
  add_report(list, r, ok);
  r = check_graded_algebra_axioms(b);
  r.check = prefix + "." + r.check;
  add_report(list, r, ok);
  r = check_bialgebra_compat(b);
  r.check = prefix + "." + r.check;
  add_report(list, r, ok);
}

Matrix random_vector(FieldSpec f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-3, 3);
  Matrix v(f, n, 1);
  for (std::size_t i = 0; i < n; ++i) v.set(i, 0, dist(rng));
  return v;
}

}  // namespace

CommandResult cmd_check(const io::Spec& s, const Options&) {
  CommandResult res;
  res.report = spec_header(s, "check");
  Json checks = Json::array();
  bool ok = true;
  try {
    switch (s.kind) {
      case io::Spec::Kind::diagonal:
      case io::Spec::Kind::matrix: {
        const Braiding b = io::build_braiding(s);
        add_verdict(checks, "invertible", true, ok);
        add_verdict(checks, "braid_equation", true, ok);
        res.report["dim"] = b.dim();
        break;
      }
      case io::Spec::Kind::yd: {
        const FinHopf h = io::build_hopf(s);
        add_report(checks, check_hopf(h), ok);
        const YDModule v = io::build_yd(s);
        add_report(checks, check_yd(v), ok);
        if (!ok) break;
        const Matrix residual = dsl::evaluate_builtin(dsl::find_builtin("yd_compat"), dsl::yd_environment(v));
        add_verdict(checks, "yd_compat_formula", residual.is_zero(), ok);
        add_report(checks, check_hopf_bimodule(yd_to_bimodule(v)), ok);
        const Braiding psi = io::build_braiding(s);
        add_verdict(checks, "braid_equation", true, ok);
        res.report["dim"] = psi.dim();
        res.report["braiding"] = io::to_json(psi.c());
        break;
      }
      case io::Spec::Kind::graded_bialgebra:
        add_axioms(checks, "bialgebra", s.bialgebra, ok);
        break;
    }
  } catch (const Error& e) {
    if (exit_code_for(e.code()) != kMathFailure) throw;
    res.report["error"] = error_json(e);
    ok = false;
  }
  res.report["checks"] = checks;
  res.report["passed"] = ok;
  res.code = ok ? kOk : kMathFailure;
  return res;
}

CommandResult cmd_nichols(const io::Spec& s, const Options& opt) {
  CommandResult res;
  res.report = spec_header(s, "nichols");
  res.report["max_degree"] = opt.max_degree;
  const TypeOneResult r = typeone_truncation(io::build_braiding(s), opt.max_degree);
  const Json body = io::to_json(r);
  for (const auto& [k, v] : body.items()) res.report[k] = v;
  return res;
}

CommandResult cmd_verify(const io::Spec& s, const Options& opt) {
  CommandResult res;
  res.report = spec_header(s, "verify");
  const std::size_t N = opt.max_degree;
  res.report["max_degree"] = N;
  res.report["seed"] = opt.seed;
  Json checks = Json::array();
  bool ok = true;
  if (s.kind == io::Spec::Kind::graded_bialgebra) {
    add_axioms(checks, "bialgebra", s.bialgebra, ok);
    add_probe(checks, "bialgebra.equivalence_probe", s.bialgebra, ok);
    add_magnum(checks, "bialgebra.magnum", s.bialgebra, ok);
  } else {
    const Braiding b = io::build_braiding(s);
    const TruncatedGradedBialgebra t = build_tensor_bialgebra(b, N);
    const TruncatedGradedBialgebra tc = build_cotensor_bialgebra(b, N);
    const TypeOneResult r = typeone_truncation(b, N);
    add_axioms(checks, "tensor", t, ok);
    add_axioms(checks, "cotensor", tc, ok);
    CheckReport sg = check_strongly_graded(tc, GradedSide::coalgebra);
    sg.check = "cotensor." + sg.check;
    add_report(checks, sg, ok);
    sg = check_strongly_graded(t, GradedSide::algebra);
    sg.check = "tensor." + sg.check;
    add_report(checks, sg, ok);
    add_probe(checks, "tensor.equivalence_probe", t, ok);
    add_probe(checks, "cotensor.equivalence_probe", tc, ok);

    bool same = true;
    for (std::size_t n = 0; n <= N; ++n) {
      const Matrix a = symmetrizer_perm_sum(b, n);
      same = same && a == symmetrizer_recursive(b, n) && a == symmetrizer_via_psi(b, n);
    }
    add_verdict(checks, "symmetrizer_oracles_agree", same, ok);
    CheckReport mor = check_graded_morphism(t, tc, r.symmetrizer);
    mor.check = "symmetrizer." + mor.check;
    add_report(checks, mor, ok);

    // Seeded spot checks of F(x⊗y) = F(x) ⧢ F(y) on random integer vectors.
    std::mt19937_64 rng(opt.seed);
    std::size_t samples = 0;
    bool sampled_ok = true;
    for (std::size_t k = 0; k < 8 && N >= 2; ++k) {
      const std::size_t total = 2 + rng() % (N - 1);
      const std::size_t a = 1 + rng() % (total - 1), c = total - a;
      const Matrix x = random_vector(b.field(), tensor_power_dim(b.dim(), a), rng);
      const Matrix y = random_vector(b.field(), tensor_power_dim(b.dim(), c), rng);
      const Matrix lhs = r.symmetrizer.components[total] * kronecker(x, y);
      const Matrix rhs = tc.mult(a, c) * kronecker(r.symmetrizer.components[a] * x, r.symmetrizer.components[c] * y);
      sampled_ok = sampled_ok && lhs == rhs;
      ++samples;
    }
    add_verdict(checks, "symmetrizer.random_multiplicativity", sampled_ok, ok, Json{{"samples", samples}});

    add_axioms(checks, "typeone", r.bialgebra, ok);
    add_probe(checks, "typeone.equivalence_probe", r.bialgebra, ok);
    add_magnum(checks, "typeone.magnum", r.bialgebra, ok);
    res.report["dims"] = r.dims;
  }
  res.report["checks"] = checks;
  res.report["passed"] = ok;
  res.code = ok ? kOk : kMathFailure;
  return res;
}

CommandResult cmd_bosonize(const io::Spec& s, const Options& opt) {
  if (s.kind != io::Spec::Kind::yd) throw Error(Errc::invalid_argument, "bosonize needs a yd spec");
  CommandResult res;
  res.report = spec_header(s, "bosonize");
  const std::size_t N = opt.max_degree;
  res.report["max_degree"] = N;
  const YDModule v = io::build_yd(s);
  require_yd(v);
  const SmashVerdict verdict = typeone_smash_check(v, N);
  res.report["dims_bosonization"] = verdict.dims_bosonization;
  res.report["dims_relative"] = verdict.dims_relative;
  res.report["verdict"] = Json{{"dims_equal", verdict.dims_equal},
                               {"images_equal", verdict.images_equal},
                               {"structure_iso", verdict.structure_iso},
                               {"iso_degree", verdict.iso_degree},
                               {"coinvariants_recover", verdict.coinvariants_recover},
                               {"bosonization_axioms", verdict.bosonization_axioms},
                               {"relative_axioms", verdict.relative_axioms},
                               {"passed", verdict.passed()}};
  const YDTypeOne q = typeone_in_yd(v, N);
  const TruncatedGradedBialgebra smash = bosonize(q.bialgebra);
  Json mult = Json::array(), comult = Json::array();
  for (std::size_t a = 0; a <= std::min<std::size_t>(2, N); ++a) {
    for (std::size_t c = 0; a + c <= std::min<std::size_t>(2, N); ++c) {
      mult.push_back(Json{{"a", a}, {"b", c}, {"matrix", io::to_json(smash.mult(a, c))}});
      comult.push_back(Json{{"a", a}, {"b", c}, {"matrix", io::to_json(smash.comult(a, c))}});
    }
  }
  res.report["structure"] = Json{{"mult", mult},
                                 {"comult", comult},
                                 {"unit", io::to_json(smash.unit())},
                                 {"counit", io::to_json(smash.counit())}};
  res.report["passed"] = verdict.passed();
  res.code = verdict.passed() ? kOk : kMathFailure;
  return res;
}

namespace {

/// Environment from a spec file: a yd spec binds the canonical signature, a
/// braiding spec binds V and c[V,V]; explicit "objects" and "generators" are
/// added on top.
dsl::Environment environment_from(const Json& j, const Options& opt, dsl::Signature& sig) {
  dsl::Environment env;
  if (!j.is_object() || !j.contains("field") || !j.at("field").is_string()) {
    throw Error(Errc::malformed_input, "environment: expected an object with a \"field\"");
  }
  env.field = opt.field ? *opt.field : parse_field(j.at("field").get<std::string>());
  if (j.contains("braiding")) {
    const io::Spec s = io::parse_spec(j, opt.field);
    if (s.kind == io::Spec::Kind::yd) {
      env = dsl::canonical_environment(io::build_yd(s), opt.max_degree);
    } else {
      const Braiding b = io::build_braiding(s);
      env.object_dims["V"] = b.dim();
      env.generators["c[V,V]"] = b.c();
      env.generators["cinv[V,V]"] = b.c_inv();
    }
  }
  if (j.contains("objects")) {
    const Json& objs = j.at("objects");
    if (!objs.is_object()) throw Error(Errc::malformed_input, "environment.objects: expected an object");
    for (const auto& [name, dim] : objs.items()) {
      if (!dim.is_number_unsigned()) throw Error(Errc::malformed_input, "environment.objects: bad dimension");
      env.object_dims[name] = dim.get<std::size_t>();
      if (!sig.has_object(name)) sig.add_object(name, dim.get<std::size_t>());
    }
  }
  if (j.contains("generators")) {
    const Json& gens = j.at("generators");
    if (!gens.is_object()) throw Error(Errc::malformed_input, "environment.generators: expected an object");
    for (const auto& [name, m] : gens.items()) {
      env.generators[name] = io::matrix_from_json(m, env.field, "environment.generators." + name);
    }
  }
  return env;
}

Json matrix_entry(const std::string& name, const Matrix& m) {
  return Json{{"name", name}, {"rows", m.rows()}, {"cols", m.cols()}, {"matrix", io::to_json(m)}};
}

}  // namespace

CommandResult cmd_eval(const std::string& mor_text, const Json& env_spec, const Options& opt) {
  dsl::Signature base = dsl::canonical_signature();
  dsl::Environment env = environment_from(env_spec, opt, base);
  const dsl::MorFile file = dsl::parse_mor(mor_text, base);
  CommandResult res;
  res.report = Json{{"command", "eval"}, {"field", env.field.to_string()}};
  Json results = Json::array();
  for (const auto& [name, m] : dsl::evaluate_mor(file, env)) results.push_back(matrix_entry(name, m));
  res.report["results"] = results;
  return res;
}

CommandResult cmd_eval_builtin(const std::string& name, const Json& env_spec, const Options& opt) {
  dsl::Signature base = dsl::canonical_signature();
  const dsl::Builtin& b = dsl::find_builtin(name);
  const dsl::Environment env = environment_from(env_spec, opt, base);
  const Matrix m = dsl::evaluate_builtin(b, env);
  CommandResult res;
  res.report = Json{{"command", "eval"}, {"field", env.field.to_string()}, {"builtin", b.name},
                    {"kind", b.is_identity() ? "identity" : "value"}, {"lhs", b.source_lhs}};
  if (b.is_identity()) res.report["rhs"] = b.source_rhs;
  res.report["result"] = matrix_entry(b.is_identity() ? "lhs - rhs" : b.name, m);
  if (b.is_identity()) {
    res.report["passed"] = m.is_zero();
    res.code = m.is_zero() ? kOk : kMathFailure;
  }
  return res;
}

namespace {

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
  for (const auto& [k, v] : j.items()) {
    const bool matrix_like = v.is_array() && !v.empty() && v.front().is_array();
    if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_object())) {
      out << indent << k << ":\n";
      if (v.is_object()) {
        render(v, indent + "  ", out);
      } else {
        for (const auto& item : v) {
          out << indent << "  -\n";
          render(item, indent + "    ", out);
        }
      }
    } else if (matrix_like) {
      out << indent << k << ":\n";
      for (const auto& row : v) {
        out << indent << "  ";
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i].get<std::string>();
        out << "\n";
      }
    } else {
      out << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::malformed_input, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json read_json_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::malformed_input, "invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(report, "", out);
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with braided bialgebras of type one", "braided_forge"};
  app.require_subcommand(1);
  Options opt;
  std::string field_text, spec_path, mor_path, env_path, builtin;

  auto common = [&](CLI::App* sub, bool degree) {
    sub->add_option("--field", field_text, "Override the input file's field (Q or GF(p))");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    if (degree) {
      sub->add_option("--max-degree,-N", opt.max_degree, "Truncation degree N")->capture_default_str();
      sub->add_option("--seed", opt.seed, "Seed for randomized spot checks")->capture_default_str();
    }
  };
  CLI::App* check = app.add_subcommand("check", "Validate a braiding, YD module or graded bialgebra");
  check->add_option("spec", spec_path, "Spec JSON file")->required();
  common(check, false);
  CLI::App* nichols = app.add_subcommand("nichols", "Truncated type-one bialgebra of a braided vector space");
  nichols->add_option("spec", spec_path, "Spec JSON file")->required();
  common(nichols, true);
  CLI::App* verify = app.add_subcommand("verify", "Run the full checker suite");
  verify->add_option("spec", spec_path, "Spec JSON file")->required();
  common(verify, true);
  CLI::App* boson = app.add_subcommand("bosonize", "Compare the bosonization with the relative construction");
  boson->add_option("spec", spec_path, "YD spec JSON file")->required();
  common(boson, true);
  CLI::App* eval = app.add_subcommand("eval", "Evaluate morphism expressions");
  eval->add_option("mor", mor_path, ".mor file (omit with --builtin)");
  eval->add_option("--env", env_path, "Environment JSON (a spec, optionally with objects/generators)")->required();
  eval->add_option("--builtin", builtin, "Evaluate a builtin formula instead of a file");
  common(eval, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (!field_text.empty()) opt.field = parse_field(field_text);
    CommandResult res;
    if (*eval) {
      const Json env = read_json_file(env_path);
      if (!builtin.empty()) {
        res = cmd_eval_builtin(builtin, env, opt);
      } else {
        if (mor_path.empty()) throw Error(Errc::invalid_argument, "eval needs a .mor file or --builtin");
        res = cmd_eval(read_file(mor_path), env, opt);
      }
    } else {
      const io::Spec spec = io::load_spec_file(spec_path, opt.field);
      if (*check) res = cmd_check(spec, opt);
      if (*nichols) res = cmd_nichols(spec, opt);
      if (*verify) res = cmd_verify(spec, opt);
      if (*boson) res = cmd_bosonize(spec, opt);
    }
    out << (opt.format == "text" ? render_text(res.report) : io::dump(res.report));
    return res.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace braided::cli
