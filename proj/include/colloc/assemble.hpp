#pragma once

#include "colloc/grid.hpp"
#include "colloc/operator.hpp"

namespace colloc {

/*
  Normal equations of the weighted least-squares fit: with W = diag(w_j),

      A = S^T W S + T^T W T,        rhs_i = sum_l w_l (f_l S_{l,i} + f'_l T_{l,i}),

  i.e. A is the Gram matrix of the basis-response columns under the discrete
  Sobolev inner product and rhs pairs them with the data samples.
*/
struct NormalSystem {
  SymMatrix A;
  std::vector<double> rhs;
};

NormalSystem build_system(const Grid& g, const SampleMatrices& sm, const SampledPair& f,
                          Exec exec = Exec::Parallel);

// the same Gram matrix assembled through discrete_h1_inner on column pairs;
// exists as an independent cross-check of build_system
SymMatrix gram_via_inner_product(const Grid& g, const SampleMatrices& sm);

}  // namespace colloc
