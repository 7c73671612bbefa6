#pragma once

#include "colloc/assemble.hpp"
#include "colloc/basis.hpp"
#include "colloc/problem.hpp"

namespace colloc {

struct ApproxSolution {
  Grid grid;
  SplineBasis basis;
  double c_minus1 = 0.0;             // fitted point-source strengths
  double c_0 = 0.0;
  std::vector<double> spline_coeffs; // m hat coefficients of the continuous part
  double dp = 0.0;                   // discrete Sobolev discrepancy of the fit
  bool used_ldlt = false;

  double continuous_value(double x) const {
    return eval_continuous_part(basis, spline_coeffs, x);
  }
};

struct TraceStep {
  int n, m;
  double dp;
};

enum class SolveStatus { Converged, MaxNReached };

struct RunTrace {
  std::vector<TraceStep> steps;
  SolveStatus status = SolveStatus::Converged;
};

// one least-squares fit at a fixed grid
ApproxSolution solve_fixed_n(const Problem& p, const Grid& g, Exec exec = Exec::Parallel);

/*
  Weighted residual of a coefficient vector against the data samples:

      dp(c) = sum_l w_l [ (f_l - (S c)_l)^2 + (f'_l - (T c)_l)^2 ]
*/
double compute_dp(const Grid& g, const SampleMatrices& sm, const SampledPair& f,
                  std::span<const double> coeffs);

struct AdaptiveResult {
  ApproxSolution solution;  // at the final grid
  RunTrace trace;
};

// refine n = 6, 8, 10, ... until dp <= epsilon; hitting n_max without
// converging is reported through the status, not an exception
AdaptiveResult solve_adaptive(const Problem& p, double epsilon, int n_max = 512,
                              QuadRule rule = QuadRule::LeftRectangle,
                              Exec exec = Exec::Parallel);

}  // namespace colloc
