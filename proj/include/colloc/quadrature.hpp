#pragma once

#include <functional>

namespace colloc {

/*
  Adaptive Simpson quadrature with Richardson acceptance: a span is accepted
  when |S(left)+S(right)-S(whole)| <= 15*tol and contributes the extrapolated
  value.  Used by the oracle paths (reference residuals, cross-checks); the
  solver pipeline relies on closed forms only and never calls this.
  Throws QuadratureError if max_depth is hit before the tolerance is met.
*/
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, int max_depth = 40);

}  // namespace colloc
