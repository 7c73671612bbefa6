#include "colloc/operator.hpp"

#include <cmath>
#include <stdexcept>

namespace colloc {

namespace {

/*
  Primitive moments over [0,t], kept stable for small t via expm1:

      e1p(t) = INT_0^t e^{u}  du = e^t - 1
      e2p(t) = INT_0^t u e^{u}  du = t e^t - (e^t - 1)
      e1m(t) = INT_0^t e^{-u} du = 1 - e^{-t}
      e2m(t) = INT_0^t u e^{-u} du = (1 - e^{-t}) - t e^{-t}
*/
double e1p(double t) { return std::expm1(t); }
double e2p(double t) { return t * std::exp(t) - std::expm1(t); }
double e1m(double t) { return -std::expm1(-t); }
double e2m(double t) { return -std::expm1(-t) - t * std::exp(-t); }

// integral over t in [ta,tb] (a sub-span of [0,w]) of e^{sign*t} times the
// linear flank: t/w when rising, (w-t)/w when falling
double flank_moment(int sign, double w, double ta, double tb, bool rising) {
  double d1, d2;
  if (sign > 0) {
    d1 = e1p(tb) - e1p(ta);
    d2 = e2p(tb) - e2p(ta);
  } else {
    d1 = e1m(tb) - e1m(ta);
    d2 = e2m(tb) - e2m(ta);
  }
  return (rising ? d2 : w * d1 - d2) / w;
}

struct Flank {
  double k;     // left edge of the supporting interval [k, k+w]
  bool rising;  // true: phi = (y-k)/w, false: phi = (k+w-y)/w
};

// hat j rises on [knots[j-1], knots[j]] and falls on [knots[j], knots[j+1]];
// the boundary hats have a single flank
int hat_flanks(const SplineBasis& b, int j, Flank out[2]) {
  int cnt = 0;
  if (j > 0) out[cnt++] = {b.knots[j - 1], true};
  if (j < b.m - 1) out[cnt++] = {b.knots[j], false};
  return cnt;
}

// accumulate C(x) and B(x) for hat j
void hat_moments(const SplineBasis& b, int j, double x, double& C, double& B) {
  if (j < 0 || j >= b.m) throw std::invalid_argument("basis index out of range");
  C = 0.0;
  B = 0.0;
  Flank fl[2];
  int cnt = hat_flanks(b, j, fl);
  double w = b.width;
  for (int p = 0; p < cnt; ++p) {
    double k = fl[p].k;
    if (x > k) {
      // part of the flank left of x, weighted with e^{y-x} <= 1
      double tb = std::min(k + w, x) - k;
      C += std::exp(k - x) * flank_moment(+1, w, 0.0, tb, fl[p].rising);
    }
    if (x < k + w) {
      // part right of x, weighted with e^{x-y} <= 1
      double ta = std::max(k, x) - k;
      B += std::exp(x - k) * flank_moment(-1, w, ta, w, fl[p].rising);
    }
  }
}

}  // namespace

double delta_response(int which, double x) {
  if (which == -1) return std::exp(-(x + 1.0));
  if (which == 0) return std::exp(-(1.0 - x));
  throw std::invalid_argument("delta_response: which must be -1 or 0");
}

double delta_response_deriv(int which, double x) {
  if (which == -1) return -std::exp(-(x + 1.0));
  if (which == 0) return std::exp(-(1.0 - x));
  throw std::invalid_argument("delta_response_deriv: which must be -1 or 0");
}

double hat_response(const SplineBasis& b, int j, double x) {
  double C, B;
  hat_moments(b, j, x, C, B);
  return C + B;
}

double hat_response_deriv(const SplineBasis& b, int j, double x) {
  double C, B;
  hat_moments(b, j, x, C, B);
  return B - C;
}

SampleMatrices build_sample_matrices(const Grid& g, const SplineBasis& b, Exec exec) {
  SampleMatrices sm;
  sm.S = Matrix(g.n, b.m + 2);
  sm.T = Matrix(g.n, b.m + 2);
  Matrix& S = sm.S;
  Matrix& T = sm.T;

  auto fill_row = [&](int i) {
    double xi = g.x[i];
    S(i, 0) = delta_response(-1, xi);
    T(i, 0) = delta_response_deriv(-1, xi);
    S(i, 1) = delta_response(0, xi);
    T(i, 1) = delta_response_deriv(0, xi);
    for (int j = 0; j < b.m; ++j) {
      double C, Bv;
      hat_moments(b, j, xi, C, Bv);
      S(i, j + 2) = C + Bv;
      T(i, j + 2) = Bv - C;
    }
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < g.n; ++i) fill_row(i);
  } else {
    for (int i = 0; i < g.n; ++i) fill_row(i);
  }
  return sm;
}

}  // namespace colloc
