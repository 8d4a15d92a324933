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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "braided/error.hpp"
#include "braided/spec_io.hpp"

namespace braided::cli {

enum ExitCode : int { kOk = 0, kMathFailure = 1, kInputError = 2 };

/// 1 for mathematical failures (a law or a validation is false), 2 for input errors.
int exit_code_for(Errc code);

struct Options {
  std::size_t max_degree = 4;
  std::optional<FieldSpec> field;
  std::string format = "json";
  std::uint64_t seed = 0;
};

struct CommandResult {
  io::Json report;
  int code = kOk;
};

CommandResult cmd_check(const io::Spec& spec, const Options& opt);
CommandResult cmd_nichols(const io::Spec& spec, const Options& opt);
CommandResult cmd_verify(const io::Spec& spec, const Options& opt);
CommandResult cmd_bosonize(const io::Spec& spec, const Options& opt);
/// Evaluates every let of a .mor file.
CommandResult cmd_eval(const std::string& mor_text, const io::Json& env_spec, const Options& opt);
/// Evaluates a named builtin (residual for identities) in the environment.
CommandResult cmd_eval_builtin(const std::string& name, const io::Json& env_spec, const Options& opt);

/// Renders a report as indented "key: value" lines.
std::string render_text(const io::Json& report);

/// Full command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braided::cli
