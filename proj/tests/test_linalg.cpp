#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "colloc/errors.hpp"
#include "colloc/linalg.hpp"

using namespace colloc;

namespace {

SymMatrix diag(std::vector<double> d) {
  SymMatrix A((int)d.size());
  for (int i = 0; i < A.dim; ++i) A.at(i, i) = d[i];
  return A;
}

SymMatrix sym2(double a, double b, double c) {
  SymMatrix A(2);
  A.at(0, 0) = a;
  A.at(0, 1) = A.at(1, 0) = b;
  A.at(1, 1) = c;
  return A;
}

// random SPD test matrix A = R^T R + dim * I, reproducible by seed
SymMatrix random_spd(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> pick(-1.0, 1.0);
  Matrix R(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) R(i, j) = pick(rng);
  SymMatrix A(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      double acc = 0.0;
      for (int k = 0; k < dim; ++k) acc += R(k, i) * R(k, j);
      A.at(i, j) = acc + (i == j ? dim : 0.0);
    }
  return A;
}

double residual_inf(const SymMatrix& A, const std::vector<double>& x,
                    const std::vector<double>& b) {
  std::vector<double> Ax = sym_matvec(A, x);
  double r = 0.0;
  for (size_t i = 0; i < b.size(); ++i) r = std::max(r, std::abs(b[i] - Ax[i]));
  return r;
}

}  // namespace

TEST_CASE("Cholesky of the identity is the identity") {
  Matrix L = cholesky(diag({1.0, 1.0, 1.0}));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(L(i, j) == (i == j ? 1.0 : 0.0));
  std::vector<double> b = {3.0, -1.0, 0.5};
  std::vector<double> x = cholesky_solve(L, b);
  for (int i = 0; i < 3; ++i) CHECK(x[i] == b[i]);
}

TEST_CASE("2x2 factor matches the hand computation") {
  // [[4,2],[2,3]] = L L^T with L = [[2,0],[1,sqrt(2)]]
  Matrix L = cholesky(sym2(4.0, 2.0, 3.0));
  CHECK(L(0, 0) == 2.0);
  CHECK(L(1, 0) == 1.0);
  CHECK(L(0, 1) == 0.0);
  CHECK(L(1, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("manufactured SPD systems solve to high accuracy") {
  for (int dim : {3, 10, 40}) {
    CAPTURE(dim);
    SymMatrix A = random_spd(dim, 1234 + dim);
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> pick(-2.0, 2.0);
    std::vector<double> x_true(dim);
    for (double& v : x_true) v = pick(rng);
    std::vector<double> b = sym_matvec(A, x_true);

    SpdFactor f(A);
    CHECK_FALSE(f.used_ldlt());
    std::vector<double> x = solve_refined(A, f, b);
    for (int i = 0; i < dim; ++i) CHECK(x[i] == doctest::Approx(x_true[i]).epsilon(1e-11));
  }
}

TEST_CASE("indefinite matrices are rejected by Cholesky with the pivot index") {
  try {
    cholesky(sym2(1.0, 2.0, 1.0));  // eigenvalues 3 and -1
    FAIL("expected NotPositiveDefinite");
  } catch (const NotPositiveDefinite& e) {
    CHECK(e.pivot == 1);
  }
  CHECK_THROWS_AS(cholesky(diag({1.0, 0.0})), NotPositiveDefinite);
  CHECK_THROWS_AS(cholesky(diag({-1.0})), NotPositiveDefinite);
}

TEST_CASE("pivoted LDL^T handles indefinite but regular systems") {
  SymMatrix A = sym2(1.0, 2.0, 1.0);
  LdltFactors f = ldlt_pivoted(A);
  std::vector<double> x = ldlt_solve(f, std::vector<double>{3.0, 3.0});
  CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-14));

  // one negative pivot for one negative eigenvalue
  int negs = 0;
  for (double d : f.d) negs += d < 0.0;
  CHECK(negs == 1);
}

TEST_CASE("singular systems raise instead of dividing by zero") {
  CHECK_THROWS_AS(ldlt_pivoted(sym2(1.0, 1.0, 1.0)), std::runtime_error);
  CHECK_THROWS_AS(ldlt_pivoted(diag({0.0, 0.0})), std::runtime_error);
}

TEST_CASE("factor wrapper falls back to LDL^T when Cholesky fails") {
  SpdFactor f(sym2(1.0, 2.0, 1.0));  // prints a warning to stderr by design
  CHECK(f.used_ldlt());
  std::vector<double> x = f.solve(std::vector<double>{3.0, 3.0});
  CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("condition estimate tracks the true 1-norm condition number") {
  SymMatrix I3 = diag({1.0, 1.0, 1.0});
  SpdFactor fi(I3);
  CHECK(condition_estimate(I3, fi) == doctest::Approx(1.0).epsilon(0.5));

  SymMatrix D = diag({1.0, 1e6});
  SpdFactor fd(D);
  double est = condition_estimate(D, fd);
  CHECK(est >= 1e6 / 3.0);
  CHECK(est <= 3e6);
}

TEST_CASE("iterative refinement does not lose accuracy") {
  SymMatrix A = random_spd(25, 777);
  std::vector<double> b(25, 1.0);
  SpdFactor f(A);
  std::vector<double> x0 = f.solve(b);
  std::vector<double> x1 = solve_refined(A, f, b);
  double r0 = residual_inf(A, x0, b);
  double r1 = residual_inf(A, x1, b);
  CHECK(r1 <= std::max(r0 * 1.5, 1e-13));
}

TEST_CASE("matvec against a hand-expanded product") {
  SymMatrix A = sym2(2.0, -1.0, 4.0);
  std::vector<double> v = {3.0, 5.0};
  std::vector<double> Av = sym_matvec(A, v);
  CHECK(Av[0] == 1.0);   // 2*3 - 1*5
  CHECK(Av[1] == 17.0);  // -1*3 + 4*5
}
