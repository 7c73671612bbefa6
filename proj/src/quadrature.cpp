#include "colloc/quadrature.hpp"

#include <cmath>

#include "colloc/errors.hpp"

namespace colloc {

namespace {

using F = std::function<double(double)>;

double recurse(const F& f, double a, double m, double b, double fa, double fm, double fb,
               double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0)
    throw QuadratureError("adaptive quadrature did not converge", std::abs(delta) / 15.0);
  return recurse(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         recurse(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const F& f, double a, double b, double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  // always refine once before accepting anything: a lucky agreement of the
  // first two Simpson estimates must not end the recursion
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  return recurse(f, a, lm, m, fa, flm, fm, left, 0.5 * abs_tol, max_depth) +
         recurse(f, m, rm, b, fm, frm, fb, right, 0.5 * abs_tol, max_depth);
}

}  // namespace colloc
