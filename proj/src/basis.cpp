#include "colloc/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace colloc {

SplineBasis make_basis(const Grid& g) {
  SplineBasis b;
  b.m = g.n / 2 + 1;
  b.width = 2.0 * g.s;
  b.knots.resize(b.m);
  for (int j = 0; j < b.m; ++j) b.knots[j] = -1.0 + j * b.width;
  b.knots.back() = 1.0;
  return b;
}

int knot_interval(const SplineBasis& b, double x) {
  int l = (int)std::floor((x + 1.0) / b.width);
  if (l < 0) l = 0;
  if (l > b.m - 2) l = b.m - 2;
  // snap against the actual knot values so that x == knots[l] locates exactly
  while (l > 0 && x < b.knots[l]) --l;
  while (l < b.m - 2 && x >= b.knots[l + 1]) ++l;
  return l;
}

// local coordinate within interval l, normalised by the actual knot spacing
// (the last interval can be one ulp off the nominal width because its right
// knot is pinned to 1.0) so that t is exactly 0/1 at the knots themselves
static double local_coord(const SplineBasis& b, int l, double x) {
  return (x - b.knots[l]) / (b.knots[l + 1] - b.knots[l]);
}

double eval_basis(const SplineBasis& b, int j, double x) {
  if (j < 0 || j >= b.m) throw std::invalid_argument("basis index out of range");
  int l = knot_interval(b, x);
  double t = local_coord(b, l, x);
  if (j == l) return 1.0 - t;      // falling flank of hat l on this interval
  if (j == l + 1) return t;        // rising flank of hat l+1
  return 0.0;
}

double eval_continuous_part(const SplineBasis& b, std::span<const double> coeffs, double x) {
  if ((int)coeffs.size() != b.m) throw std::invalid_argument("coefficient count does not match basis");
  int l = knot_interval(b, x);
  double t = local_coord(b, l, x);
  return coeffs[l] * (1.0 - t) + coeffs[l + 1] * t;
}

}  // namespace colloc
