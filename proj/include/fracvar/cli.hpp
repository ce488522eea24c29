#pragma once

#include <optional>
#include <string>

namespace fracvar::cli {

/// Resolved solve configuration (flat JSON document, unknown keys rejected).
struct RunConfig {
  double a = 0.0;
  double b = 1.0;
  int n = 512;
  double alpha = 0.6;
  double p = 2.0;
  std::string model = "dirichlet";  // dirichlet | pnorm_potential | pnorm_linear | bolza
  int dim = 1;
  double model_p = 2.0;             // growth exponent of the pnorm models
  std::string model_f = "one";      // one | t | cos_pi
  std::string model_potential = "x_squared";  // zero | x_squared
  long max_iters = 1000;
  double grad_tol = 1e-8;
  double armijo_c = 1e-4;
  double backtrack = 0.5;
  std::string v0 = "zero";  // zero | random
  std::uint64_t seed = 0;
  std::string out_dir = ".";
};

/// Loads and validates a RunConfig; throws std::runtime_error with a message
/// naming the offending field or constraint.
RunConfig load_run_config(const std::string& path);

/// Runs minimize on the configured problem. Writes solution.csv and
/// report.json into the output directory. Exit codes: 0 converged,
/// 1 config error, 2 max_iters, 3 line_search_failure.
int cmd_solve(const std::string& config_path, const std::optional<std::string>& out_dir,
              const std::optional<std::uint64_t>& seed);

/// Runs the property lattice. Writes properties.json. Exit codes: 0 all
/// checks pass, 1 config error (including an empty lattice), 4 failures.
int cmd_verify(const std::string& config_path, const std::optional<std::string>& out_dir);

/// Solver-vs-closed-form comparisons. Writes oracle.csv (quadratic problem)
/// and operator_table.csv (power-function operator errors). Exit codes:
/// 0 all below tolerance, 1 config error, 4 otherwise.
int cmd_oracle(const std::string& config_path, const std::optional<std::string>& out_dir);

}  // namespace fracvar::cli
