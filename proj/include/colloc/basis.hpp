#pragma once

#include <span>
#include <vector>

#include "colloc/grid.hpp"

namespace colloc {

/*
  Piecewise-linear hat basis on every other grid point: m = n/2 + 1 knots
  k_j = -1 + j*width with width = 2s, the last knot pinned to exactly +1.
  Hat j is 1 at knot j, falls linearly to 0 at the neighbouring knots; the
  first and last hats are half hats.  At most two hats are nonzero at any x
  and they sum to 1 there.
*/
struct SplineBasis {
  int m = 0;
  double width = 0.0;
  std::vector<double> knots;
};

SplineBasis make_basis(const Grid& g);

// index of the knot interval containing x: knots[l] <= x < knots[l+1],
// clamped to [0, m-2] so x = +1 lands in the last interval
int knot_interval(const SplineBasis& b, double x);

// value of hat j at x; j in [0, m)
double eval_basis(const SplineBasis& b, int j, double x);

// sum_j coeffs[j] * hat_j(x) in O(1) via the two covering hats
double eval_continuous_part(const SplineBasis& b, std::span<const double> coeffs, double x);

}  // namespace colloc
