#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "colloc/solver.hpp"

using namespace colloc;

namespace {

Problem example(int k) { return builtin_examples()[k - 1]; }

Problem from_text(const char* f_text) {
  Problem p;
  p.name = "test";
  p.f = parse_expr(f_text);
  return p;
}

}  // namespace

TEST_CASE("zero data produces the zero fit") {
  ApproxSolution sol = solve_fixed_n(from_text("0"), make_grid(8));
  CHECK(std::abs(sol.c_minus1) <= 1e-14);
  CHECK(std::abs(sol.c_0) <= 1e-14);
  for (double c : sol.spline_coeffs) CHECK(std::abs(c) <= 1e-14);
  CHECK(sol.dp <= 1e-28);
}

TEST_CASE("a pure point-source response is fit exactly") {
  // f = e^{-(x+1)} lies in the span of column 0, so the least-squares
  // residual is numerically zero and the source strength is recovered
  ApproxSolution sol = solve_fixed_n(from_text("exp(-(x+1))"), make_grid(16));
  CHECK(sol.c_minus1 == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(sol.c_0) <= 1e-9);
  for (double c : sol.spline_coeffs) CHECK(std::abs(c) <= 1e-8);
  CHECK(sol.dp <= 1e-18);
}

TEST_CASE("discrepancy of frozen reference runs") {
  // frozen reference values for this configuration (left-rectangle weights,
  // epsilon-driven refinement from n = 6 in steps of 2)
  struct Row {
    int example;
    double epsilon;
    int n, m;
    double dp;
  };
  const Row rows[] = {
      {1, 1e-6, 30, 16, 7.137e-7},
      {2, 1e-4, 18, 10, 4.399e-5},
      {2, 1e-6, 30, 16, 7.588e-7},
      {2, 1e-8, 52, 27, 9.393e-9},
      {3, 1e-8, 224, 113, 9.644e-9},
      {4, 1e-4, 38, 20, 8.775e-5},
      {4, 1e-8, 120, 61, 9.068e-9},
  };
  for (const Row& r : rows) {
    CAPTURE(r.example);
    CAPTURE(r.epsilon);
    AdaptiveResult res = solve_adaptive(example(r.example), r.epsilon);
    CHECK(res.trace.status == SolveStatus::Converged);
    CHECK(res.solution.grid.n == r.n);
    CHECK(res.solution.basis.m == r.m);
    CHECK(res.solution.dp == doctest::Approx(r.dp).epsilon(1e-3));
  }
}

TEST_CASE("the trace walks n upward in steps of two and stops at the tolerance") {
  AdaptiveResult res = solve_adaptive(example(1), 1e-6);
  REQUIRE(!res.trace.steps.empty());
  CHECK(res.trace.steps.front().n == 6);
  for (size_t i = 0; i + 1 < res.trace.steps.size(); ++i) {
    CHECK(res.trace.steps[i + 1].n == res.trace.steps[i].n + 2);
    CHECK(res.trace.steps[i].dp > 1e-6);  // earlier grids must have failed the test
  }
  CHECK(res.trace.steps.back().dp <= 1e-6);
  CHECK(res.trace.steps.back().n == res.solution.grid.n);
  CHECK(res.trace.steps.back().dp == res.solution.dp);
}

TEST_CASE("loose tolerances are satisfied by the first grid") {
  AdaptiveResult res = solve_adaptive(example(1), 0.5);
  CHECK(res.trace.status == SolveStatus::Converged);
  CHECK(res.solution.grid.n == 6);
  CHECK(res.trace.steps.size() == 1);
}

TEST_CASE("hitting n_max is reported as a status, not an exception") {
  AdaptiveResult res = solve_adaptive(example(3), 1e-12, /*n_max=*/16);
  CHECK(res.trace.status == SolveStatus::MaxNReached);
  CHECK(res.solution.grid.n == 16);
  CHECK(res.trace.steps.back().n == 16);
  CHECK(res.solution.dp > 1e-12);
}

TEST_CASE("the discrepancy falls quickly under refinement") {
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    double dp8 = solve_fixed_n(example(k), make_grid(8)).dp;
    double dp64 = solve_fixed_n(example(k), make_grid(64)).dp;
    CHECK(dp64 < dp8 / 10.0);
  }
}

TEST_CASE("bad solve parameters are rejected") {
  CHECK_THROWS_AS(solve_adaptive(example(1), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(solve_adaptive(example(1), -1e-6), std::invalid_argument);
  CHECK_THROWS_AS(solve_adaptive(example(1), 1e-6, 7), std::invalid_argument);
  CHECK_THROWS_AS(solve_adaptive(example(1), 1e-6, 4), std::invalid_argument);
}

TEST_CASE("solutions evaluate their continuous part through the basis") {
  ApproxSolution sol = solve_fixed_n(example(1), make_grid(32));
  // at a knot the value is the corresponding coefficient
  for (int j = 0; j < sol.basis.m; ++j)
    CHECK(sol.continuous_value(sol.basis.knots[j]) == doctest::Approx(sol.spline_coeffs[j]));
}
