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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "braided/bosonization.hpp"
#include "braided/cotensor_bialgebra.hpp"
#include "braided/dsl.hpp"
#include "braided/dsl_builtins.hpp"
#include "braided/parallel.hpp"
#include "braided/spec_io.hpp"
#include "braided/tensor_bialgebra.hpp"
#include "braided/typeone.hpp"
#include "oracles.hpp"

#if BRAIDED_FORGE_WITH_CLI
#include "commands.hpp"
#endif

using namespace braided;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F7 = FieldSpec::prime(7);

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

std::vector<io::Spec> load_corpus() {
  std::vector<std::string> paths;
  for (const auto& e : std::filesystem::directory_iterator(BRAIDED_FORGE_CORPUS_DIR)) {
    if (e.path().extension() == ".json") paths.push_back(e.path().string());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<io::Spec> out;
  for (const auto& p : paths) out.push_back(io::load_spec_file(p));
  return out;
}

Braiding diag(const Matrix& q) { return braiding_from_diagonal(q, BasedSpace::make(q.field(), q.rows())); }

bool axioms_pass(const TruncatedGradedBialgebra& b) {
  return check_graded_coalgebra_axioms(b).passed() && check_graded_algebra_axioms(b).passed() &&
         check_bialgebra_compat(b).passed();
}

// 1: the three symmetrizer constructions agree for n ≤ 6, dim V ≤ 2.
void ac1(Outcome& o) {
  std::mt19937_64 rng(1);
  std::vector<Braiding> cases;
  for (const FieldSpec& f : {Q, F7}) {
    cases.push_back(diag(Matrix::from_ints(f, 1, 1, {-1})));
    cases.push_back(diag(Matrix::from_ints(f, 1, 1, {2})));
    cases.push_back(diag(Matrix::from_ints(f, 2, 2, {2, 1, 4, 2})));
    Matrix q(f, 2, 2);
    for (std::size_t i = 0; i < 4; ++i) q.set(i / 2, i % 2, long(1 + rng() % 5));
    cases.push_back(diag(q));
    cases.push_back(braiding_from_matrix(Matrix::from_ints(f, 4, 4, {1, 1, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 1}),
                                         BasedSpace::make(f, 2)));
  }
  std::size_t compared = 0;
  for (const Braiding& b : cases) {
    for (std::size_t n = 0; n <= 6; ++n) {
      const Matrix p = symmetrizer_perm_sum(b, n);
      o.require(p == symmetrizer_recursive(b, n), "recursive differs at n=" + std::to_string(n));
      o.require(p == symmetrizer_via_psi(b, n), "psi formula differs at n=" + std::to_string(n));
      ++compared;
    }
  }
  o.note << compared << " (braiding, n) pairs";
}

// 2: axiom suite for T(V) and T^c(V), N = 5.
void ac2(Outcome& o, const std::vector<io::Spec>& corpus) {
  std::size_t n = 0;
  for (const io::Spec& s : corpus) {
    if (!s.has_braiding()) continue;
    const Braiding b = io::build_braiding(s);
    o.require(axioms_pass(build_tensor_bialgebra(b, 5)), "T fails on " + s.name);
    o.require(axioms_pass(build_cotensor_bialgebra(b, 5)), "T^c fails on " + s.name);
    ++n;
  }
  o.note << n << " braidings";
}

bool probe_consistent(const TruncatedGradedBialgebra& b) {
  const EquivalenceReport r = equivalence_probe(b);
  return r.coalgebra_consistent() && r.algebra_consistent();
}

// 3: T^c strongly graded as a coalgebra, T as an algebra; probe consistency.
void ac3(Outcome& o, const std::vector<io::Spec>& corpus) {
  for (const io::Spec& s : corpus) {
    if (!s.has_braiding()) {
      o.require(probe_consistent(s.bialgebra), "probe inconsistent on " + s.name);
      continue;
    }
    const Braiding b = io::build_braiding(s);
    const auto t = build_tensor_bialgebra(b, 5);
    const auto tc = build_cotensor_bialgebra(b, 5);
    o.require(check_strongly_graded(tc, GradedSide::coalgebra).passed(), "T^c not strongly graded: " + s.name);
    o.require(check_strongly_graded(t, GradedSide::algebra).passed(), "T not strongly graded: " + s.name);
    o.require(probe_consistent(t) && probe_consistent(tc), "probe inconsistent on " + s.name);
    o.require(probe_consistent(typeone_truncation(b, 5).bialgebra), "probe inconsistent on typeone " + s.name);
  }
  o.note << "all corpus inputs";
}

// 4: type-one dimensions.
void ac4(Outcome& o) {
  using D = std::vector<std::size_t>;
  o.require(typeone_truncation(diag(Matrix::from_ints(Q, 1, 1, {1})), 4).dims == D{1, 1, 1, 1, 1}, "q=1");
  o.require(typeone_truncation(diag(Matrix::from_ints(Q, 1, 1, {-1})), 4).dims == D{1, 1, 0, 0, 0}, "q=-1");
  o.require(typeone_truncation(diag(Matrix::from_ints(F7, 1, 1, {2})), 4).dims == D{1, 1, 1, 0, 0}, "q=2");
  const Matrix a2 = Matrix::from_ints(F7, 2, 2, {2, 1, 4, 2});
  const D got = typeone_truncation(diag(a2), 3).dims;
  D brute;
  for (std::size_t n = 0; n <= 3; ++n) brute.push_back(oracle::minor_rank(oracle::diagonal_symmetrizer(a2, n)));
  o.require(got == D{1, 2, 4, 4}, "A2 frozen");
  o.require(got == brute, "A2 brute-force oracle");
  o.note << "A2: " << hilbert_text(got);
}

// 5: wedge powers against floors on T^c, n + m ≤ 5.
void ac5(Outcome& o, const std::vector<io::Spec>& corpus) {
  std::size_t checks = 0;
  for (const io::Spec& s : corpus) {
    if (!s.has_braiding()) continue;
    const auto tc = build_cotensor_bialgebra(io::build_braiding(s), 5);
    std::vector<Subobject> w;
    for (std::size_t n = 0; n <= 5; ++n) {
      w.push_back(wedge_power(tc, n));
      o.require(same_subobject(w[n], floor_subobject(tc, n)), "wedge power != floor on " + s.name);
      ++checks;
    }
    for (std::size_t m = 1; m <= 5; ++m) {
      for (std::size_t n = 1; m + n <= 5; ++n) {
        o.require(same_subobject(wedge(tc, w[m], w[n]), w[m + n]), "wedge of powers on " + s.name);
        ++checks;
      }
    }
  }
  o.note << checks << " subspace equalities";
}

// 6: magnum on type-one outputs and the negative fixture.
void ac6(Outcome& o, const std::vector<io::Spec>& corpus) {
  bool saw_fixture = false;
  for (const io::Spec& s : corpus) {
    if (!s.has_braiding()) {
      const MagnumVerdict v = magnum_check(s.bialgebra);
      o.require(!v.wedge_clause, "fixture wedge clause should fail: " + s.name);
      saw_fixture = true;
      continue;
    }
    const MagnumVerdict v = magnum_check(typeone_truncation(io::build_braiding(s), 5).bialgebra);
    o.require(v.ideal_clause && v.wedge_clause, "magnum fails on " + s.name);
  }
  o.require(saw_fixture, "negative fixture missing from corpus");
  o.note << "typeone outputs (true, true), fixture wedge clause false";
}

// 7: F is a graded bialgebra morphism, a + b ≤ 5.
void ac7(Outcome& o, const std::vector<io::Spec>& corpus) {
  std::size_t inst = 0;
  for (const io::Spec& s : corpus) {
    if (!s.has_braiding()) continue;
    const Braiding b = io::build_braiding(s);
    const TypeOneResult r = typeone_truncation(b, 5);
    const CheckReport rep = check_graded_morphism(build_tensor_bialgebra(b, 5), build_cotensor_bialgebra(b, 5), r.symmetrizer);
    o.require(rep.passed(), "F not a morphism on " + s.name);
    inst += rep.instances;
  }
  o.note << inst << " instances";
}

YDModule sign_module() {
  const FinHopf h = group_algebra(cyclic_group(2), Q);
  return yd_from_group_data(h, {1}, {Matrix::from_ints(Q, 1, 1, {1}), Matrix::from_ints(Q, 1, 1, {-1})});
}

YDModule character_z3() {
  const FinHopf h = group_algebra(cyclic_group(3), F7);
  return yd_from_group_data(h, {1}, {Matrix::from_ints(F7, 1, 1, {1}), Matrix::from_ints(F7, 1, 1, {2}),
                                     Matrix::from_ints(F7, 1, 1, {4})});
}

// 8: bosonization against the relative construction; Hopf-bimodule laws.
void ac8(Outcome& o, const std::vector<io::Spec>& corpus) {
  const SmashVerdict s = typeone_smash_check(sign_module(), 4);
  o.require(s.passed(), "smash check fails on sign module");
  o.require(s.dims_bosonization == std::vector<std::size_t>{2, 2, 0, 0, 0}, "sign dims");
  const SmashVerdict c = typeone_smash_check(character_z3(), 4);
  o.require(c.passed(), "smash check fails on Z/3 character");
  o.require(c.dims_bosonization == std::vector<std::size_t>{3, 3, 3, 0, 0}, "character dims");
  std::size_t modules = 0;
  for (const io::Spec& sp : corpus) {
    if (sp.kind != io::Spec::Kind::yd) continue;
    o.require(check_hopf_bimodule(yd_to_bimodule(io::build_yd(sp))).passed(), "HopfBimod residual on " + sp.name);
    ++modules;
  }
  o.note << "HopfBimod on " << modules << " YD modules";
}

// 9: builtins against hand-coded matrices, and parser round trips.
void ac9(Outcome& o, const std::vector<io::Spec>& corpus) {
  using namespace braided::dsl;
  std::size_t compared = 0;
  for (const io::Spec& sp : corpus) {
    if (sp.kind != io::Spec::Kind::yd) continue;
    const YDModule v = io::build_yd(sp);
    const Environment env = canonical_environment(v, 3);
    auto val = [&](const char* name) { return evaluate_builtin(find_builtin(name), env); };
    for (const Builtin& b : builtin_formulas()) {
      if (b.is_identity()) {
        o.require(evaluate_builtin(b, env).is_zero(), b.name + " nonzero on " + sp.name);
        ++compared;
      }
    }
    const Braiding psi = braiding_from_yd(v);
    const HopfBimodule m = yd_to_bimodule(v);
    const YDTypeOne q = typeone_in_yd(v, 3);
    const TotalBialgebra t = bosonize_total(total_structure(q.bialgebra), v.hopf);
    const TruncatedGradedBialgebra g = bosonize(q.bialgebra);
    const std::vector<std::pair<const char*, Matrix>> refs = {
        {"psi_braiding", psi.c()},         {"psi_inverse", psi.c_inv()},
        {"yd_bimodule_mu_l", m.mu_l},      {"yd_bimodule_mu_r", m.mu_r},
        {"yd_bimodule_rho_l", m.rho_l},    {"yd_bimodule_rho_r", m.rho_r},
        {"adjoint_action", adjoint_action(v.hopf)}, {"coadjoint_coaction", coadjoint_coaction(v.hopf)},
        {"bosonization_mult", t.m},        {"bosonization_unit", t.u},
        {"bosonization_comult", t.delta},  {"bosonization_counit", t.eps},
        {"smash_mult", g.mult(1, 1)},      {"smash_comult", g.comult(1, 1)}};
    for (const auto& [name, ref] : refs) {
      o.require(val(name) == ref, std::string(name) + " differs on " + sp.name);
      ++compared;
    }
  }
  const Signature sig = canonical_signature();
  oracle::ExprFuzzer fuzz(sig, 99);
  std::size_t trips = 0;
  for (int i = 0; i < 1000; ++i) {
    const ExprPtr e = fuzz.generate(fuzz.random_word(3), 4);
    const std::string text = print_expr(*e);
    const ExprPtr back = parse_expr(text, sig);
    const bool same = same_expr(*e, *back) && print_expr(*back) == text;
    o.require(same, "round trip failed: " + text);
    trips += same;
  }
  o.note << compared << " builtin comparisons, " << trips << " round trips";
}

// 10: byte-identical nichols/verify output across runs and thread caps.
void ac10(Outcome& o) {
#if BRAIDED_FORGE_WITH_CLI
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(BRAIDED_FORGE_CORPUS_DIR)) files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    for (const char* cmd : {"nichols", "verify"}) {
      std::vector<std::string> outs;
      for (std::size_t cap : {1u, 8u, 1u, 8u}) {
        parallel::set_thread_cap(cap);
        std::ostringstream out, err;
        cli::run({cmd, f, "-N", "4"}, out, err);
        outs.push_back(out.str());
      }
      parallel::set_thread_cap(0);
      for (const auto& s : outs) o.require(s == outs[0], std::string(cmd) + " output varies on " + f);
    }
  }
  o.note << files.size() << " files x {nichols, verify} x caps {1, 8} x 2 runs";
#else
  o.require(false, "built without the CLI");
#endif
}

}  // namespace

int main() {
  const auto corpus = load_corpus();
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"AC1 symmetrizer triple-oracle equality", ac1},
      {"AC2 T(V) and T^c(V) axiom suite", [&](Outcome& o) { ac2(o, corpus); }},
      {"AC3 strongly graded sides and probe consistency", [&](Outcome& o) { ac3(o, corpus); }},
      {"AC4 type-one dimensions", ac4},
      {"AC5 wedge powers equal floors", [&](Outcome& o) { ac5(o, corpus); }},
      {"AC6 magnum verdicts", [&](Outcome& o) { ac6(o, corpus); }},
      {"AC7 F is a graded bialgebra morphism", [&](Outcome& o) { ac7(o, corpus); }},
      {"AC8 bosonization equals the relative construction", [&](Outcome& o) { ac8(o, corpus); }},
      {"AC9 DSL conformance", [&](Outcome& o) { ac9(o, corpus); }},
      {"AC10 determinism", ac10},
  };
  int failed = 0;
  for (const auto& [label, fn] : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.ok ? "PASS " : "FAIL ") << label << " (" << o.note.str() << "; " << secs << " s)\n";
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
