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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "braided/parallel.hpp"
#include "commands.hpp"

namespace {

const std::string kCorpus = BRAIDED_FORGE_CORPUS_DIR;

std::string corpus(const std::string& name) { return kCorpus + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = braided::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("braided_forge_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::vector<int> dims_of(const nlohmann::json& j) { return j.at("dims").get<std::vector<int>>(); }

}  // namespace

TEST(Cli, CheckValidSpecs) {
  for (const char* f : {"q1_rational.json", "a2_gf7.json", "jordan_rational.json", "sign_z2_rational.json",
                        "plane_z3_gf7.json", "truncated_poly_gf2.json"}) {
    const Outcome r = run({"check", corpus(f)});
    EXPECT_EQ(r.code, 0) << f << "\n" << r.out << r.err;
    EXPECT_TRUE(r.json().at("passed").get<bool>()) << f;
  }
}

TEST(Cli, CheckBraidViolatorReportsPosition) {
  const std::string path = write_temp(
      "bad.json",
      R"({"name":"bad","field":"Q","space":{"dim":2},"braiding":{"kind":"matrix",)"
      R"("c":[[1,1,0,0],[0,0,1,0],[0,1,0,0],[0,0,0,1]]}})");
  const Outcome r = run({"check", path});
  EXPECT_EQ(r.code, 1);
  const auto j = r.json();
  EXPECT_EQ(j.at("error").at("kind"), "BraidEquationFails");
  EXPECT_EQ(j.at("error").at("position").size(), 2u);
}

TEST(Cli, CheckZeroParameterIsMathFailure) {
  const std::string path = write_temp(
      "zero.json", R"({"name":"z","field":"Q","space":{"dim":1},"braiding":{"kind":"diagonal","q":[["0"]]}})");
  EXPECT_EQ(run({"check", path}).code, 1);
}

TEST(Cli, MalformedInputsAreInputErrors) {
  EXPECT_EQ(run({"check", write_temp("trunc.json", R"({"name":"x","field":"Q","space":{"di)")}).code, 2);
  EXPECT_EQ(run({"check", corpus("does_not_exist.json")}).code, 2);
  EXPECT_EQ(run({"check", write_temp("nokind.json", R"({"field":"Q","space":{"dim":1}})")}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"nichols", corpus("q1_rational.json"), "--field", "GF(4)"}).code, 2);
}

TEST(Cli, NicholsDimensions) {
  EXPECT_EQ(dims_of(run({"nichols", corpus("qminus1_rational.json"), "-N", "4"}).json()),
            (std::vector<int>{1, 1, 0, 0, 0}));
  EXPECT_EQ(dims_of(run({"nichols", corpus("q1_rational.json"), "-N", "3"}).json()), (std::vector<int>{1, 1, 1, 1}));
  const auto a2 = run({"nichols", corpus("a2_gf7.json"), "-N", "3"}).json();
  EXPECT_EQ(dims_of(a2), (std::vector<int>{1, 2, 4, 4}));
  EXPECT_EQ(a2.at("new_relations").at("3"), 4);
  EXPECT_EQ(dims_of(run({"nichols", corpus("q2_gf7.json")}).json()), (std::vector<int>{1, 1, 1, 0, 0}));
}

TEST(Cli, TextFormat) {
  const Outcome r = run({"nichols", corpus("qminus1_rational.json"), "-N", "2", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1 + t"), std::string::npos) << r.out;
}

TEST(Cli, VerifyCorpus) {
  for (const auto& entry : std::filesystem::directory_iterator(kCorpus)) {
    const std::string name = entry.path().filename().string();
    const Outcome r = run({"verify", entry.path().string(), "-N", "4"});
    if (name == "truncated_poly_gf2.json") {
      EXPECT_EQ(r.code, 1);
      bool saw_magnum = false;
      const auto report = r.json();
      for (const auto& c : report.at("checks")) {
        if (c.at("check") == "bialgebra.magnum") {
          saw_magnum = true;
          EXPECT_FALSE(c.at("wedge_clause").get<bool>());
          EXPECT_FALSE(c.at("passed").get<bool>());
        } else {
          EXPECT_TRUE(c.at("passed").get<bool>()) << c.dump();
        }
      }
      EXPECT_TRUE(saw_magnum);
    } else {
      EXPECT_EQ(r.code, 0) << name << "\n" << r.out;
    }
  }
}

TEST(Cli, VerifyDegreeZero) {
  const Outcome r = run({"verify", corpus("a2_gf7.json"), "-N", "0"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, Bosonize) {
  const auto sign = run({"bosonize", corpus("sign_z2_rational.json"), "-N", "3"});
  EXPECT_EQ(sign.code, 0);
  EXPECT_EQ(sign.json().at("dims_bosonization").get<std::vector<int>>(), (std::vector<int>{2, 2, 0, 0}));
  const auto chr = run({"bosonize", corpus("char_z3_gf7.json"), "-N", "3"});
  EXPECT_EQ(chr.code, 0);
  EXPECT_EQ(chr.json().at("dims_relative").get<std::vector<int>>(), (std::vector<int>{3, 3, 3, 0}));
  // Over the trivial group the bosonization is the type-one bialgebra itself.
  const auto triv = run({"bosonize", corpus("trivial_group_rational.json"), "-N", "3"});
  const auto nich = run({"nichols", corpus("trivial_group_rational.json"), "-N", "3"});
  EXPECT_EQ(triv.json().at("dims_bosonization").get<std::vector<int>>(), dims_of(nich.json()));
  // Bosonization needs YD data.
  EXPECT_EQ(run({"bosonize", corpus("q1_rational.json")}).code, 2);
}

TEST(Cli, EvalMorFile) {
  const std::string env = write_temp(
      "env.json", R"({"name":"e","field":"Q","space":{"dim":2},"braiding":{"kind":"diagonal",)"
                  R"("q":[["1","2"],["3","-1"]]}})");
  const std::string mor = write_temp("a.mor", "let x = id[V]\nlet y = cinv[V,V] . c[V,V]\n");
  const Outcome r = run({"eval", mor, "--env", env});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto j = r.json();
  ASSERT_EQ(j.at("results").size(), 2u);
  EXPECT_EQ(j.at("results")[0].at("rows"), 2);
  EXPECT_EQ(j.at("results")[1].at("rows"), 4);
  const auto id4 = nlohmann::json::parse(R"([["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]])");
  EXPECT_EQ(j.at("results")[1].at("matrix"), id4);
  const std::string unbound = write_temp("b.mor", "object W\ngen f : V -> W\nlet z = f\n");
  const Outcome u = run({"eval", unbound, "--env", env});
  EXPECT_EQ(u.code, 2);
  EXPECT_NE((u.out + u.err).find("UnknownName"), std::string::npos);
  EXPECT_EQ(run({"eval", write_temp("c.mor", "let z = (id[V]\n"), "--env", env}).code, 2);
  EXPECT_EQ(run({"eval", write_temp("d.mor", "let z = c[V,V] . id[V]\n"), "--env", env}).code, 2);
}

TEST(Cli, EvalBuiltins) {
  const Outcome r = run({"eval", "--builtin", "bialgebra_compat", "--env", corpus("sign_z2_rational.json")});
  EXPECT_EQ(r.code, 0) << r.out;
  const Outcome p = run({"eval", "--builtin", "psi_braiding", "--env", corpus("sign_z2_rational.json")});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("\"-1\""), std::string::npos) << p.out;
  EXPECT_EQ(run({"eval", "--builtin", "no_such_formula", "--env", corpus("sign_z2_rational.json")}).code, 2);
}

TEST(Cli, DeterministicAcrossRunsAndThreadCaps) {
  for (const char* f : {"a2_gf7.json", "jordan_rational.json", "plane_z3_gf7.json"}) {
    std::vector<std::string> outputs;
    for (std::size_t cap : {1u, 8u, 1u, 8u}) {
      braided::parallel::set_thread_cap(cap);
      outputs.push_back(run({"nichols", corpus(f), "-N", "4"}).out);
      outputs.push_back(run({"verify", corpus(f), "-N", "4", "--seed", "9"}).out);
    }
    braided::parallel::set_thread_cap(0);
    for (std::size_t i = 2; i < outputs.size(); ++i) EXPECT_EQ(outputs[i], outputs[i % 2]) << f;
  }
}
