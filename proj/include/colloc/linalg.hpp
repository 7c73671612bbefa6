#pragma once

#include <span>

#include "colloc/matrix.hpp"

namespace colloc {

// lower-triangular L with A = L L^T; throws NotPositiveDefinite on a bad pivot
Matrix cholesky(const SymMatrix& A);

// forward/back substitution with the Cholesky factor
std::vector<double> cholesky_solve(const Matrix& L, std::span<const double> b);

/*
  Fallback for matrices the Cholesky factorisation rejects: LDL^T with
  symmetric max-diagonal pivoting (1x1 pivots).  Adequate for the
  nearly-semidefinite Gram matrices this code can produce; a zero pivot
  means the system is singular and raises std::runtime_error.
*/
struct LdltFactors {
  Matrix L;                // unit lower triangle
  std::vector<double> d;   // pivots
  std::vector<int> perm;   // P^T A P = L D L^T, perm[k] = original index
};

LdltFactors ldlt_pivoted(const SymMatrix& A);
std::vector<double> ldlt_solve(const LdltFactors& f, std::span<const double> b);

std::vector<double> sym_matvec(const SymMatrix& A, std::span<const double> v);

// factorisation wrapper: Cholesky first, pivoted LDL^T (with a warning to
// stderr) if that fails
class SpdFactor {
 public:
  explicit SpdFactor(const SymMatrix& A);
  std::vector<double> solve(std::span<const double> b) const;
  bool used_ldlt() const { return used_ldlt_; }

 private:
  Matrix chol_;
  LdltFactors ldlt_;
  bool used_ldlt_ = false;
};

// solve A x = b with one step of iterative refinement (residual recomputed
// in working precision)
std::vector<double> solve_refined(const SymMatrix& A, const SpdFactor& f,
                                  std::span<const double> b);

// 1-norm condition estimate: ||A||_1 times a power-iteration style estimate
// of ||A^{-1}||_1 driven by solves with the factorisation
double condition_estimate(const SymMatrix& A, const SpdFactor& f);

}  // namespace colloc
