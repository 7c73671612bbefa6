#pragma once

#include "colloc/problem.hpp"
#include "colloc/solver.hpp"

namespace colloc {

/*
  Pointwise comparison of the fitted continuous part against an exact one on
  the uniform M-point grid t_i = -1 + 2i/(M-1):

      rpe_i = |g_fit(t_i) - g(t_i)| / max_i |g(t_i)|,   re = max_i rpe_i.

  If g vanishes on the whole grid the relative measure is undefined;
  `degenerate` is set and rpe holds plain absolute errors instead.
*/
struct ErrorReport {
  int M = 0;
  std::vector<double> t;
  std::vector<double> g_exact;
  std::vector<double> g_approx;
  std::vector<double> rpe;
  double re = 0.0;
  double denom = 0.0;        // max_i |g(t_i)|
  bool degenerate = false;
  double err_a_minus1 = 0.0; // |c_{-1} - a_{-1}|
  double err_a_0 = 0.0;      // |c_0 - a_0|
};

ErrorReport evaluate(const ApproxSolution& sol, const ExactSolution& exact, int M = 200);

}  // namespace colloc
