#include "colloc/assemble.hpp"

#include <stdexcept>

namespace colloc {

NormalSystem build_system(const Grid& g, const SampleMatrices& sm, const SampledPair& f,
                          Exec exec) {
  const Matrix& S = sm.S;
  const Matrix& T = sm.T;
  if (S.rows != g.n || T.rows != g.n || S.cols != T.cols)
    throw std::invalid_argument("sample matrices do not match grid");
  if ((int)f.values.size() != g.n || (int)f.derivs.size() != g.n)
    throw std::invalid_argument("data samples do not match grid");

  int dim = S.cols;
  NormalSystem sys;
  sys.A = SymMatrix(dim);
  sys.rhs.assign(dim, 0.0);
  SymMatrix& A = sys.A;

  // upper triangle of the Gram matrix; entries are independent, the sum over
  // grid points stays serial so results do not depend on the thread count
  auto fill_col = [&](int j) {
    for (int i = 0; i <= j; ++i) {
      double acc = 0.0;
      for (int l = 0; l < g.n; ++l)
        acc += g.w[l] * (S(l, i) * S(l, j) + T(l, i) * T(l, j));
      A.at(i, j) = acc;
    }
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < dim; ++j) fill_col(j);
  } else {
    for (int j = 0; j < dim; ++j) fill_col(j);
  }
  A.mirror_upper();

  for (int i = 0; i < dim; ++i) {
    double acc = 0.0;
    for (int l = 0; l < g.n; ++l)
      acc += g.w[l] * (f.values[l] * S(l, i) + f.derivs[l] * T(l, i));
    sys.rhs[i] = acc;
  }
  return sys;
}

SymMatrix gram_via_inner_product(const Grid& g, const SampleMatrices& sm) {
  int dim = sm.S.cols;
  // pull the columns out as sampled functions and pair them up
  std::vector<SampledPair> cols(dim);
  for (int j = 0; j < dim; ++j) {
    cols[j].values.resize(g.n);
    cols[j].derivs.resize(g.n);
    for (int l = 0; l < g.n; ++l) {
      cols[j].values[l] = sm.S(l, j);
      cols[j].derivs[l] = sm.T(l, j);
    }
  }
  SymMatrix A(dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i <= j; ++i) A.at(i, j) = discrete_h1_inner(g, cols[i], cols[j]);
  A.mirror_upper();
  return A;
}

}  // namespace colloc
