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

#include "braided/dsl_builtins.hpp"

#include "braided/bosonization.hpp"
#include "braided/error.hpp"

namespace braided::dsl {

Signature canonical_signature() {
  Signature s;
  for (const char* x : {"H", "Q", "M", "V", "Qa", "Qb", "Qab"}) s.add_object(x);
  s.add_generator("m", {"H", "H"}, {"H"});
  s.add_generator("u", {}, {"H"});
  s.add_generator("delta", {"H"}, {"H", "H"});
  s.add_generator("eps", {"H"}, {});
  s.add_generator("S", {"H"}, {"H"});
  s.add_generator("Sinv", {"H"}, {"H"});
  s.add_generator("mu", {"H", "V"}, {"V"});
  s.add_generator("rho", {"V"}, {"H", "V"});
  s.add_generator("mu_l", {"H", "M"}, {"M"});
  s.add_generator("mu_r", {"M", "H"}, {"M"});
  s.add_generator("rho_l", {"M"}, {"H", "M"});
  s.add_generator("rho_r", {"M"}, {"M", "H"});
  s.add_generator("mQ", {"Q", "Q"}, {"Q"});
  s.add_generator("uQ", {}, {"Q"});
  s.add_generator("deltaQ", {"Q"}, {"Q", "Q"});
  s.add_generator("epsQ", {"Q"}, {});
  s.add_generator("muQ", {"H", "Q"}, {"Q"});
  s.add_generator("rhoQ", {"Q"}, {"H", "Q"});
  s.add_generator("mab", {"Qa", "Qb"}, {"Qab"});
  s.add_generator("deltaab", {"Qab"}, {"Qa", "Qb"});
  s.add_generator("muQb", {"H", "Qb"}, {"Qb"});
  s.add_generator("rhoQb", {"Qb"}, {"H", "Qb"});
  return s;
}

namespace {

struct Source {
  const char* name;
  const char* lhs;
  const char* rhs;
};

// clang-format off
const Source kSources[] = {
  {"bialgebra_compat", "delta . m", "(m * m) . (id[H] * c[H,H] * id[H]) . (delta * delta)"},
  {"counit_compat", "eps . m", "eps * eps"},
  {"antipode_left", "m . (S * id[H]) . delta", "u . eps"},
  {"antipode_right", "m . (id[H] * S) . delta", "u . eps"},
  {"hopf_bimod_1", "rho_l . mu_l", "(m * mu_l) . (id[H] * c[H,H] * id[M]) . (delta * rho_l)"},
  {"hopf_bimod_2", "rho_l . mu_r", "(m * mu_r) . (id[H] * c[M,H] * id[H]) . (rho_l * delta)"},
  {"hopf_bimod_3", "rho_r . mu_l", "(mu_l * m) . (id[H] * c[H,M] * id[H]) . (delta * rho_r)"},
  {"hopf_bimod_4", "rho_r . mu_r", "(mu_r * m) . (id[M] * c[H,H] * id[H]) . (rho_r * delta)"},
  {"yd_compat", "(m * mu) . (id[H] * c[H,H] * id[V]) . (delta * rho)",
   "(m * id[V]) . (id[H] * c[V,H]) . (rho * id[H]) . (mu * id[H]) . (id[H] * c[H,V]) . (delta * id[V])"},
  {"psi_braiding", "(mu * id[V]) . (id[H] * c[V,V]) . (rho * id[V])", ""},
  {"psi_inverse",
   "(id[V] * mu) . (id[V] * cinv[H,V]) . (cinv[V,V] * Sinv) . (id[V] * cinv[V,H]) . (id[V] * rho)", ""},
  {"yd_bimodule_mu_l", "(mu * m) . (id[H] * c[H,V] * id[H]) . (delta * id[V] * id[H])", ""},
  {"yd_bimodule_mu_r", "id[V] * m", ""},
  {"yd_bimodule_rho_l", "(m * id[V] * id[H]) . (id[H] * c[V,H] * id[H]) . (rho * delta)", ""},
  {"yd_bimodule_rho_r", "id[V] * delta", ""},
  {"bosonization_mult",
   "(mQ * m) . (id[Q] * muQ * id[H] * id[H]) . (id[Q] * id[H] * c[H,Q] * id[H]) . (id[Q] * delta * id[Q] * id[H])", ""},
  {"bosonization_unit", "uQ * u", ""},
  {"bosonization_comult",
   "(id[Q] * m * id[Q] * id[H]) . (id[Q] * id[H] * c[Q,H] * id[H]) . (id[Q] * rhoQ * id[H] * id[H]) . (deltaQ * delta)", ""},
  {"bosonization_counit", "epsQ * eps", ""},
  {"smash_mult",
   "(mab * m) . (id[Qa] * muQb * id[H] * id[H]) . (id[Qa] * id[H] * c[H,Qb] * id[H]) . (id[Qa] * delta * id[Qb] * id[H])", ""},
  {"smash_comult",
   "(id[Qa] * m * id[Qb] * id[H]) . (id[Qa] * id[H] * c[Qb,H] * id[H]) . (id[Qa] * rhoQb * id[H] * id[H]) . (deltaab * delta)", ""},
  {"adjoint_action", "m . (m * id[H]) . (id[H] * c[H,H]) . (id[H] * S * id[H]) . (delta * id[H])", ""},
  {"coadjoint_coaction", "(m * id[H]) . (id[H] * S * id[H]) . (id[H] * c[H,H]) . (delta * id[H]) . delta", ""},
};
// clang-format on

std::vector<Builtin> build_library() {
  const Signature sig = canonical_signature();
  std::vector<Builtin> out;
  for (const auto& s : kSources) {
    Builtin b{s.name, s.lhs, s.rhs, parse_expr(s.lhs, sig), nullptr};
    const auto lt = typecheck(*b.lhs, sig);
    if (*s.rhs) {
      b.rhs = parse_expr(s.rhs, sig);
      if (typecheck(*b.rhs, sig) != lt) {
        throw Error(Errc::type_error, std::string("sides of builtin '") + s.name + "' have different types");
      }
    }
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

const std::vector<Builtin>& builtin_formulas() {
  static const std::vector<Builtin> library = build_library();
  return library;
}

const Builtin& find_builtin(const std::string& name) {
  for (const auto& b : builtin_formulas()) {
    if (b.name == name) return b;
  }
  throw Error(Errc::unknown_name, "no builtin formula named '" + name + "'");
}

Matrix evaluate_builtin(const Builtin& b, const Environment& env) {
  static const Signature sig = canonical_signature();
  Matrix value = evaluate(*b.lhs, sig, env);
  if (b.is_identity()) value -= evaluate(*b.rhs, sig, env);
  return value;
}

Environment yd_environment(const YDModule& v) {
  const FinHopf& h = v.hopf;
  Environment env;
  env.field = h.field;
  auto& g = env.generators;
  env.object_dims["H"] = h.dim;
  g["m"] = h.m;
  g["u"] = h.u;
  g["delta"] = h.delta;
  g["eps"] = h.eps;
  g["S"] = h.S;
  g["Sinv"] = h.S_inv;

  env.object_dims["V"] = v.dim;
  g["mu"] = v.action;
  g["rho"] = v.coaction;

  const HopfBimodule m = yd_to_bimodule(v);
  env.object_dims["M"] = m.dim;
  g["mu_l"] = m.mu_l;
  g["mu_r"] = m.mu_r;
  g["rho_l"] = m.rho_l;
  g["rho_r"] = m.rho_r;
  return env;
}

Environment canonical_environment(const YDModule& v, std::size_t N, std::size_t a, std::size_t b) {
  Environment env = yd_environment(v);
  auto& g = env.generators;

  const YDTypeOne q = typeone_in_yd(v, N);
  const TotalBialgebra t = total_structure(q.bialgebra);
  env.object_dims["Q"] = t.dim;
  g["mQ"] = t.m;
  g["uQ"] = t.u;
  g["deltaQ"] = t.delta;
  g["epsQ"] = t.eps;
  g["muQ"] = t.action;
  g["rhoQ"] = t.coaction;

  if (a + b <= N) {
    const auto& alg = q.bialgebra.algebra;
    env.object_dims["Qa"] = alg.dim(a);
    env.object_dims["Qb"] = alg.dim(b);
    env.object_dims["Qab"] = alg.dim(a + b);
    g["mab"] = alg.mult(a, b);
    g["deltaab"] = alg.comult(a, b);
    g["muQb"] = q.bialgebra.action[b];
    g["rhoQb"] = q.bialgebra.coaction[b];
  }
  return env;
}

}  // namespace braided::dsl
