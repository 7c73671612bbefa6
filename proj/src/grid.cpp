#include "colloc/grid.hpp"

#include <stdexcept>

namespace colloc {

Grid make_grid(int n, QuadRule rule) {
  if (n < 6 || n % 2 != 0) throw std::invalid_argument("grid size must be even and at least 6");
  Grid g;
  g.n = n;
  g.s = 2.0 / n;
  g.rule = rule;
  g.x.resize(n);
  for (int j = 0; j < n; ++j) g.x[j] = -1.0 + j * g.s;
  g.w.assign(n, g.s);
  if (rule == QuadRule::Trapezoid) {
    g.w.front() = 0.5 * g.s;
    g.w.back() = 0.5 * g.s;
  }
  return g;
}

SampledPair sample_expression(const Grid& g, const Expr& f) {
  SampledPair p;
  p.values.resize(g.n);
  p.derivs.resize(g.n);
  for (int j = 0; j < g.n; ++j) {
    Jet2 v = eval_jet(f, g.x[j]);
    p.values[j] = v.v;
    p.derivs[j] = v.d1;
  }
  return p;
}

double discrete_h1_inner(const Grid& g, const SampledPair& u, const SampledPair& v) {
  if ((int)u.values.size() != g.n || (int)v.values.size() != g.n ||
      (int)u.derivs.size() != g.n || (int)v.derivs.size() != g.n)
    throw std::invalid_argument("sample length does not match grid size");
  double acc = 0.0;
  for (int j = 0; j < g.n; ++j)
    acc += g.w[j] * (u.values[j] * v.values[j] + u.derivs[j] * v.derivs[j]);
  return acc;
}

double discrete_h1_norm_sq(const Grid& g, const SampledPair& u) { return discrete_h1_inner(g, u, u); }

}  // namespace colloc
