#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "colloc/expr.hpp"
#include "colloc/grid.hpp"

using namespace colloc;

TEST_CASE("node layout and left-rectangle weights") {
  Grid g = make_grid(6);
  CHECK(g.n == 6);
  CHECK(g.s == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  REQUIRE(g.x.size() == 6);
  REQUIRE(g.w.size() == 6);
  CHECK(g.x.front() == -1.0);
  for (int j = 0; j < 6; ++j) {
    CHECK(g.x[j] == doctest::Approx(-1.0 + j * g.s).epsilon(1e-15));
    CHECK(g.w[j] == g.s);
  }
  // the right endpoint itself is not a node
  CHECK(g.x.back() == doctest::Approx(1.0 - g.s).epsilon(1e-15));
}

TEST_CASE("trapezoid weights halve both boundary nodes") {
  Grid g = make_grid(10, QuadRule::Trapezoid);
  CHECK(g.w.front() == g.s / 2.0);
  CHECK(g.w.back() == g.s / 2.0);
  for (int j = 1; j < g.n - 1; ++j) CHECK(g.w[j] == g.s);
  double total = 0.0;
  for (double w : g.w) total += w;
  CHECK(total == doctest::Approx(2.0 - g.s).epsilon(1e-15));
}

TEST_CASE("invalid sizes are rejected") {
  for (int n : {5, 4, 7, 2, 0, -6, 1}) {
    CAPTURE(n);
    CHECK_THROWS_AS(make_grid(n), std::invalid_argument);
  }
}

TEST_CASE("discrete H1 norm of u = x at n = 6 matches the hand sum") {
  // nodes -1, -2/3, -1/3, 0, 1/3, 2/3 with weight 1/3 each:
  // sum w (x^2 + 1) = (19/9 + 6)/3 = 73/27
  Grid g = make_grid(6);
  SampledPair u = sample_expression(g, parse_expr("x"));
  CHECK(discrete_h1_norm_sq(g, u) == doctest::Approx(73.0 / 27.0).epsilon(1e-15));
}

TEST_CASE("inner product is symmetric and bilinear") {
  Grid g = make_grid(12);
  SampledPair u = sample_expression(g, parse_expr("x"));
  SampledPair v = sample_expression(g, parse_expr("cos(pi*x)"));
  SampledPair w = sample_expression(g, parse_expr("exp(x)"));

  CHECK(discrete_h1_inner(g, u, v) == doctest::Approx(discrete_h1_inner(g, v, u)).epsilon(1e-15));

  SampledPair upv;
  upv.values.resize(g.n);
  upv.derivs.resize(g.n);
  for (int j = 0; j < g.n; ++j) {
    upv.values[j] = u.values[j] + 2.5 * v.values[j];
    upv.derivs[j] = u.derivs[j] + 2.5 * v.derivs[j];
  }
  double lhs = discrete_h1_inner(g, upv, w);
  double rhs = discrete_h1_inner(g, u, w) + 2.5 * discrete_h1_inner(g, v, w);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));

  CHECK(discrete_h1_norm_sq(g, u) == doctest::Approx(discrete_h1_inner(g, u, u)).epsilon(1e-15));
}

TEST_CASE("dimension mismatches are rejected") {
  Grid g = make_grid(6);
  SampledPair u = sample_expression(g, parse_expr("x"));
  SampledPair bad;
  bad.values.assign(4, 0.0);
  bad.derivs.assign(4, 0.0);
  CHECK_THROWS_AS(discrete_h1_inner(g, u, bad), std::invalid_argument);
}

namespace {

// quadrature error of the discrete H1 norm against the continuous one for
// phi = (1-x)^2, whose norm integrand J = (1-x)^4 + 4(1-x)^2 vanishes to
// second order at +1 (so the missing right node costs only O(s^3)) but not
// at -1 (J(-1) = 32)
double h1_error(int n, QuadRule rule) {
  Grid g = make_grid(n, rule);
  SampledPair u = sample_expression(g, parse_expr("(1-x)^2"));
  double exact = 256.0 / 15.0;  // int_{-1}^{1} (1-x)^4 + 4(1-x)^2 dx
  return std::abs(discrete_h1_norm_sq(g, u) - exact);
}

}  // namespace

TEST_CASE("weight rules converge at their expected orders") {
  // successive halvings of s: left-rectangle errors shrink ~2x (first
  // order), trapezoid errors ~4x (second order)
  std::vector<int> sizes = {32, 64, 128, 256};
  for (size_t i = 0; i + 1 < sizes.size(); ++i) {
    double order_left = std::log2(h1_error(sizes[i], QuadRule::LeftRectangle) /
                                  h1_error(sizes[i + 1], QuadRule::LeftRectangle));
    double order_trap = std::log2(h1_error(sizes[i], QuadRule::Trapezoid) /
                                  h1_error(sizes[i + 1], QuadRule::Trapezoid));
    CAPTURE(sizes[i]);
    CHECK(order_left == doctest::Approx(1.0).epsilon(0.15));
    CHECK(order_trap == doctest::Approx(2.0).epsilon(0.15));
  }
  // and the trapezoid rule is strictly more accurate here
  for (int n : sizes) CHECK(h1_error(n, QuadRule::Trapezoid) < h1_error(n, QuadRule::LeftRectangle));
}

TEST_CASE("both rules drive the error down for an oscillatory function") {
  auto err = [](int n, QuadRule rule) {
    Grid g = make_grid(n, rule);
    SampledPair u = sample_expression(g, parse_expr("cos(pi*x)"));
    double exact = 1.0 + std::numbers::pi * std::numbers::pi;  // int cos^2 + pi^2 sin^2
    return std::abs(discrete_h1_norm_sq(g, u) - exact);
  };
  for (QuadRule rule : {QuadRule::LeftRectangle, QuadRule::Trapezoid}) {
    CHECK(err(256, rule) < 0.05);
    // the integrand is 2-periodic, so the full-weight rule is exact on this
    // grid by aliasing; allow rounding noise in the comparison
    CHECK(err(256, rule) <= err(8, rule) + 1e-12);
  }
}
