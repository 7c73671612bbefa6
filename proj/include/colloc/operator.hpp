#pragma once

#include "colloc/basis.hpp"
#include "colloc/matrix.hpp"

namespace colloc {

/*
  Closed-form responses of the kernel map

      (K u)(x) = INT_{-1}^{1} e^{-|x-y|} u(y) dy

  to the basis elements: the two boundary point sources and the hats.
  Splitting the integral at y = x gives

      (K u)(x)  = C(x) + B(x),          (K u)'(x) = B(x) - C(x),
      C(x) = e^{-x} INT_{-1}^{x} e^{y}  u(y) dy,
      B(x) = e^{x}  INT_{x}^{1}  e^{-y} u(y) dy,

  so value and derivative samples come from the same two one-sided moments.
*/

// response to a unit point source: which = -1 places it at x = -1, which = 0 at x = +1
double delta_response(int which, double x);
double delta_response_deriv(int which, double x);

// response to hat j of the basis
double hat_response(const SplineBasis& b, int j, double x);
double hat_response_deriv(const SplineBasis& b, int j, double x);

/*
  Value and derivative samples of all basis responses at the grid points.
  Column layout (n rows, m+2 columns):
      0: point source at -1,  1: point source at +1,  2..m+1: hats 0..m-1
  S holds values, T holds x-derivatives.
*/
struct SampleMatrices {
  Matrix S, T;
};

SampleMatrices build_sample_matrices(const Grid& g, const SplineBasis& b,
                                     Exec exec = Exec::Parallel);

}  // namespace colloc
