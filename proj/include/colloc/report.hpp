#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "colloc/problem.hpp"
#include "colloc/solver.hpp"

namespace colloc {

enum class OutputFormat { Csv, Json };

/*
  Everything the command layer needs for one run.  The CLI front end fills
  this in from flags; validation lives in the cmd_* entry points so library
  callers get the same checks.
*/
struct RunConfig {
  std::string command = "solve";   // solve | table | sweep (metadata only)
  int example = 0;                 // 1..4, or 0 when f_text is used instead
  std::string f_text;              // user-supplied right-hand side
  double epsilon = 1e-6;           // solve: stopping tolerance
  std::vector<double> epsilons = {1e-4, 1e-6, 1e-8};  // table: one row per entry
  std::vector<int> n_values = {8, 16, 32, 64, 128};   // sweep: fixed grid sizes
  int n_max = 512;
  QuadRule rule = QuadRule::LeftRectangle;
  int M = 200;                     // error-grid resolution
  std::string out_path;            // data-file destination; "" sends data to `out`
  OutputFormat format = OutputFormat::Csv;
  bool oracle = false;             // derive the exact solution from f_text
  Exec exec = Exec::Parallel;
};

// resolve the configured source into a Problem; throws ConfigError for bad
// flag combinations and ParseError for a malformed expression
Problem problem_from_config(const RunConfig& cfg);

/*
  Command entry points.  Human-readable summaries go to `out`; data files go
  to cfg.out_path when set, otherwise they follow the summary on `out`.

  Return value is the process exit status: 0 on success, 1 when the adaptive
  loop stopped at n_max without reaching epsilon.  ConfigError/ParseError
  propagate (the CLI maps them to 2) and solver failures propagate as other
  exceptions (mapped to 3).
*/
int cmd_solve(const RunConfig& cfg, std::ostream& out);
int cmd_table(const RunConfig& cfg, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, std::ostream& out);

}  // namespace colloc
