#include "colloc/linalg.hpp"

#include <cmath>
#include <iostream>
#include <numeric>
#include <stdexcept>

#include "colloc/errors.hpp"

namespace colloc {

Matrix cholesky(const SymMatrix& A) {
  int d = A.dim;
  Matrix L(d, d);
  for (int j = 0; j < d; ++j) {
    double diag = A.at(j, j);
    for (int k = 0; k < j; ++k) diag -= L(j, k) * L(j, k);
    if (!(diag > 0.0) || !std::isfinite(diag)) throw NotPositiveDefinite(j);
    double ljj = std::sqrt(diag);
    L(j, j) = ljj;
    for (int i = j + 1; i < d; ++i) {
      double acc = A.at(i, j);
      for (int k = 0; k < j; ++k) acc -= L(i, k) * L(j, k);
      L(i, j) = acc / ljj;
    }
  }
  return L;
}

std::vector<double> cholesky_solve(const Matrix& L, std::span<const double> b) {
  int d = L.rows;
  if ((int)b.size() != d) throw std::invalid_argument("right-hand side length mismatch");
  std::vector<double> y(b.begin(), b.end());
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < i; ++k) y[i] -= L(i, k) * y[k];
    y[i] /= L(i, i);
  }
  for (int i = d - 1; i >= 0; --i) {
    for (int k = i + 1; k < d; ++k) y[i] -= L(k, i) * y[k];
    y[i] /= L(i, i);
  }
  return y;
}

LdltFactors ldlt_pivoted(const SymMatrix& A) {
  int d = A.dim;
  SymMatrix M = A;  // working copy, updated in place
  LdltFactors f;
  f.L = Matrix(d, d);
  f.d.assign(d, 0.0);
  f.perm.resize(d);
  std::iota(f.perm.begin(), f.perm.end(), 0);

  for (int k = 0; k < d; ++k) {
    // symmetric pivot: bring the largest remaining diagonal to position k
    int p = k;
    for (int i = k + 1; i < d; ++i)
      if (std::abs(M.at(i, i)) > std::abs(M.at(p, p))) p = i;
    if (p != k) {
      for (int j = 0; j < d; ++j) std::swap(M.at(k, j), M.at(p, j));
      for (int j = 0; j < d; ++j) std::swap(M.at(j, k), M.at(j, p));
      for (int j = 0; j < k; ++j) std::swap(f.L(k, j), f.L(p, j));
      std::swap(f.perm[k], f.perm[p]);
    }
    double dk = M.at(k, k);
    if (dk == 0.0 || !std::isfinite(dk)) throw std::runtime_error("singular matrix in LDL^T");
    f.d[k] = dk;
    f.L(k, k) = 1.0;
    for (int i = k + 1; i < d; ++i) {
      double lik = M.at(i, k) / dk;
      f.L(i, k) = lik;
      for (int j = k + 1; j <= i; ++j) {
        double upd = M.at(i, j) - lik * M.at(j, k);
        M.at(i, j) = upd;
        M.at(j, i) = upd;
      }
    }
  }
  return f;
}

std::vector<double> ldlt_solve(const LdltFactors& f, std::span<const double> b) {
  int d = f.L.rows;
  if ((int)b.size() != d) throw std::invalid_argument("right-hand side length mismatch");
  std::vector<double> y(d);
  for (int i = 0; i < d; ++i) y[i] = b[f.perm[i]];
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < i; ++k) y[i] -= f.L(i, k) * y[k];
  for (int i = 0; i < d; ++i) y[i] /= f.d[i];
  for (int i = d - 1; i >= 0; --i)
    for (int k = i + 1; k < d; ++k) y[i] -= f.L(k, i) * y[k];
  std::vector<double> x(d);
  for (int i = 0; i < d; ++i) x[f.perm[i]] = y[i];
  return x;
}

std::vector<double> sym_matvec(const SymMatrix& A, std::span<const double> v) {
  int d = A.dim;
  if ((int)v.size() != d) throw std::invalid_argument("vector length mismatch");
  std::vector<double> r(d, 0.0);
  for (int i = 0; i < d; ++i) {
    double acc = 0.0;
    for (int j = 0; j < d; ++j) acc += A.at(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

SpdFactor::SpdFactor(const SymMatrix& A) {
  try {
    chol_ = cholesky(A);
  } catch (const NotPositiveDefinite& e) {
    std::cerr << "warning: Cholesky failed (" << e.what() << "), falling back to pivoted LDL^T\n";
    ldlt_ = ldlt_pivoted(A);
    used_ldlt_ = true;
  }
}

std::vector<double> SpdFactor::solve(std::span<const double> b) const {
  return used_ldlt_ ? ldlt_solve(ldlt_, b) : cholesky_solve(chol_, b);
}

std::vector<double> solve_refined(const SymMatrix& A, const SpdFactor& f,
                                  std::span<const double> b) {
  std::vector<double> x = f.solve(b);
  std::vector<double> Ax = sym_matvec(A, x);
  std::vector<double> r(A.dim);
  for (int i = 0; i < A.dim; ++i) r[i] = b[i] - Ax[i];
  std::vector<double> dx = f.solve(r);
  for (int i = 0; i < A.dim; ++i) x[i] += dx[i];
  return x;
}

double condition_estimate(const SymMatrix& A, const SpdFactor& f) {
  int d = A.dim;
  double norm_a = 0.0;
  for (int j = 0; j < d; ++j) {
    double col = 0.0;
    for (int i = 0; i < d; ++i) col += std::abs(A.at(i, j));
    norm_a = std::max(norm_a, col);
  }

  // Hager-style estimate of ||A^{-1}||_1 (A symmetric, so A^{-T} = A^{-1})
  std::vector<double> v(d, 1.0 / d);
  double est = 0.0;
  for (int iter = 0; iter < 5; ++iter) {
    std::vector<double> y = f.solve(v);
    double y1 = 0.0;
    for (double t : y) y1 += std::abs(t);
    est = std::max(est, y1);
    std::vector<double> xi(d);
    for (int i = 0; i < d; ++i) xi[i] = y[i] >= 0.0 ? 1.0 : -1.0;
    std::vector<double> z = f.solve(xi);
    int jmax = 0;
    double zmax = 0.0, zv = 0.0;
    for (int i = 0; i < d; ++i) {
      if (std::abs(z[i]) > zmax) {
        zmax = std::abs(z[i]);
        jmax = i;
      }
      zv += z[i] * v[i];
    }
    if (zmax <= zv) break;
    v.assign(d, 0.0);
    v[jmax] = 1.0;
  }
  return norm_a * est;
}

}  // namespace colloc
