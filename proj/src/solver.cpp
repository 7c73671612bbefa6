#include "colloc/solver.hpp"

#include <stdexcept>

#include "colloc/linalg.hpp"

namespace colloc {

ApproxSolution solve_fixed_n(const Problem& p, const Grid& g, Exec exec) {
  SplineBasis basis = make_basis(g);
  SampleMatrices sm = build_sample_matrices(g, basis, exec);
  SampledPair f = sample_expression(g, p.f);
  NormalSystem sys = build_system(g, sm, f, exec);

  SpdFactor factor(sys.A);
  std::vector<double> c = solve_refined(sys.A, factor, sys.rhs);

  ApproxSolution sol;
  sol.grid = g;
  sol.basis = std::move(basis);
  sol.c_minus1 = c[0];
  sol.c_0 = c[1];
  sol.spline_coeffs.assign(c.begin() + 2, c.end());
  sol.used_ldlt = factor.used_ldlt();
  sol.dp = compute_dp(g, sm, f, c);
  return sol;
}

double compute_dp(const Grid& g, const SampleMatrices& sm, const SampledPair& f,
                  std::span<const double> coeffs) {
  const Matrix& S = sm.S;
  const Matrix& T = sm.T;
  if ((int)coeffs.size() != S.cols) throw std::invalid_argument("coefficient count mismatch");
  double acc = 0.0;
  for (int l = 0; l < g.n; ++l) {
    double sv = 0.0, tv = 0.0;
    for (int j = 0; j < S.cols; ++j) {
      sv += S(l, j) * coeffs[j];
      tv += T(l, j) * coeffs[j];
    }
    double rv = f.values[l] - sv;
    double rd = f.derivs[l] - tv;
    acc += g.w[l] * (rv * rv + rd * rd);
  }
  return acc;
}

AdaptiveResult solve_adaptive(const Problem& p, double epsilon, int n_max, QuadRule rule,
                              Exec exec) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (n_max < 6 || n_max % 2 != 0) throw std::invalid_argument("n_max must be even and at least 6");

  AdaptiveResult res;
  for (int n = 6;; n += 2) {
    Grid g = make_grid(n, rule);
    res.solution = solve_fixed_n(p, g, exec);
    res.trace.steps.push_back({n, res.solution.basis.m, res.solution.dp});
    if (res.solution.dp <= epsilon) {
      res.trace.status = SolveStatus::Converged;
      return res;
    }
    if (n >= n_max) {
      res.trace.status = SolveStatus::MaxNReached;
      return res;
    }
  }
}

}  // namespace colloc
