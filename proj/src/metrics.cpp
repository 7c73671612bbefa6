#include "colloc/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace colloc {

ErrorReport evaluate(const ApproxSolution& sol, const ExactSolution& exact, int M) {
  if (M < 2) throw std::invalid_argument("evaluate: need at least two sample points");

  ErrorReport rep;
  rep.M = M;
  rep.t.resize(M);
  rep.g_exact.resize(M);
  rep.g_approx.resize(M);
  rep.rpe.resize(M);

  for (int i = 0; i < M; ++i) {
    // Hit the endpoints exactly; intermediate nodes are uniform.
    double t = (i == M - 1) ? 1.0 : -1.0 + 2.0 * i / (M - 1);
    rep.t[i] = t;
    rep.g_exact[i] = exact.g(t);
    rep.g_approx[i] = sol.continuous_value(t);
    rep.denom = std::max(rep.denom, std::abs(rep.g_exact[i]));
  }

  rep.degenerate = (rep.denom == 0.0);
  double scale = rep.degenerate ? 1.0 : rep.denom;
  for (int i = 0; i < M; ++i) {
    rep.rpe[i] = std::abs(rep.g_approx[i] - rep.g_exact[i]) / scale;
    rep.re = std::max(rep.re, rep.rpe[i]);
  }

  rep.err_a_minus1 = std::abs(sol.c_minus1 - exact.a_minus1);
  rep.err_a_0 = std::abs(sol.c_0 - exact.a_0);
  return rep;
}

}  // namespace colloc
