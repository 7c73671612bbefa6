#pragma once

#include <vector>

#include "colloc/expr.hpp"

namespace colloc {

enum class QuadRule { LeftRectangle, Trapezoid };

/*
  Uniform collocation grid on [-1,1]: n points x_j = -1 + j*s (j = 0..n-1)
  with spacing s = 2/n, so the right endpoint +1 itself is not a node.
  Quadrature weights:
    left-rectangle  w_j = s                 (default)
    trapezoid       w_0 = w_{n-1} = s/2, inner w_j = s
  n must be even and at least 6.
*/
struct Grid {
  int n = 0;
  double s = 0.0;
  QuadRule rule = QuadRule::LeftRectangle;
  std::vector<double> x;
  std::vector<double> w;
};

Grid make_grid(int n, QuadRule rule = QuadRule::LeftRectangle);

// samples of a function and its derivative on the grid points
struct SampledPair {
  std::vector<double> values;
  std::vector<double> derivs;
};

SampledPair sample_expression(const Grid& g, const Expr& f);

// discrete first-order Sobolev inner product: sum_j w_j (u_j v_j + u'_j v'_j)
double discrete_h1_inner(const Grid& g, const SampledPair& u, const SampledPair& v);
double discrete_h1_norm_sq(const Grid& g, const SampledPair& u);

}  // namespace colloc
