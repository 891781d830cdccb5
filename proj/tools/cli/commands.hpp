// Copyright 2026 The gexit Authors.
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

#ifndef GEXIT_TOOLS_CLI_COMMANDS_HPP_
#define GEXIT_TOOLS_CLI_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gexit::cli {

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kRuntimeError = 3,
};

enum class Subcommand {
  exit_experiment,
  density_convergence,
  evt,
  residual,
  identity_suite,
};

enum class OutputFormat { csv, json };

struct RunConfig {
  Subcommand subcommand = Subcommand::exit_experiment;
  double beta = 1.0;
  double epsilon = 0.01;
  double a = 1.0;
  double step = 1e-3;
  std::string mode = "simulate";  // or "limit-law"
  std::vector<double> r_list;
  std::vector<std::uint64_t> n_list;
  std::uint64_t n_samples = 10'000;
  std::uint64_t replicas = 10'000;
  std::uint64_t mc_n = 1'000;
  std::uint64_t budget = 1'000'000'000;
  double grid_min = 0.0;
  double grid_max = 0.0;
  double grid_step = 1e-3;
  double ks_threshold = 0.03;
  std::uint64_t seed = 42;
  unsigned workers = 1;
  std::string output_dir;
  OutputFormat format = OutputFormat::csv;
  bool perturb = false;
};

std::string to_string(Subcommand s);

// Per-subcommand defaults that the argument parser starts from.
RunConfig defaults_for(Subcommand s);

int cmd_exit_experiment(const RunConfig& config, std::ostream& out,
                        std::ostream& err);
int cmd_density_convergence(const RunConfig& config, std::ostream& out,
                            std::ostream& err);
int cmd_evt(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_residual(const RunConfig& config, std::ostream& out,
                 std::ostream& err);
int cmd_identity_suite(const RunConfig& config, std::ostream& out,
                       std::ostream& err);

// Parses argv, dispatches, and maps exceptions to exit codes. The seed
// defaults to $GEXIT_SEED when set, else 42.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace gexit::cli

#endif  // GEXIT_TOOLS_CLI_COMMANDS_HPP_
