#include "colloc/problem.hpp"

#include <cmath>

#include "colloc/quadrature.hpp"

namespace colloc {

std::vector<Problem> builtin_examples() {
  struct Row {
    const char* f;
    const char* g;
  };
  // right-hand sides and the continuous parts of their exact solutions;
  // the point-source strengths follow from f via exact_from_f
  static const Row rows[4] = {
      {"-2+2*cos(pi*(x+1))",
       "-1+(1+pi^2)*cos(pi*(x+1))"},
      {"-2*exp(x-1)+2/pi*sin(pi*(x+1))+2*cos(pi*(x+1))",
       "(pi+1/pi)*sin(pi*(x+1))+(1+pi^2)*cos(pi*(x+1))"},
      {"cos(pi*(x+1)/2)+4*cos(2*pi*(x+1))-1.5*cos(7*pi*(x+1)/2)",
       "0.5*(1+pi^2/4)*cos(pi*(x+1)/2)+(2+8*pi^2)*cos(2*pi*(x+1))-0.75*(1+12.25*pi^2)*cos(7*pi*(x+1)/2)"},
      {"exp(-x)+2*sin(2*pi*(x+1))",
       "(1+4*pi^2)*sin(2*pi*(x+1))"},
  };

  std::vector<Problem> out;
  out.reserve(4);
  for (int i = 0; i < 4; ++i) {
    Problem p;
    p.name = "example-" + std::to_string(i + 1);
    p.f = parse_expr(rows[i].f);
    ExactSolution ex = exact_from_f(p.f);
    Expr g = parse_expr(rows[i].g);
    ex.g = [g](double t) { return eval(g, t); };
    p.exact = std::move(ex);
    out.push_back(std::move(p));
  }
  return out;
}

ExactSolution exact_from_f(const Expr& f) {
  Jet2 left = eval_jet(f, -1.0);
  Jet2 right = eval_jet(f, 1.0);
  ExactSolution e;
  e.a_minus1 = 0.5 * (left.v - left.d1);
  e.a_0 = 0.5 * (right.d1 + right.v);
  e.g = [f](double t) {
    Jet2 j = eval_jet(f, t);
    return 0.5 * (j.v - j.d2);
  };
  return e;
}

double apply_R_to_exact(const ExactSolution& e, double x, double abs_tol) {
  // point-source responses
  double acc = e.a_minus1 * std::exp(-(x + 1.0)) + e.a_0 * std::exp(-(1.0 - x));
  // continuous part, split at the kernel kink; both integrands stay bounded
  // because the exponent is non-positive on each side
  const auto& g = e.g;
  acc += integrate([&](double y) { return std::exp(y - x) * g(y); }, -1.0, x, abs_tol);
  acc += integrate([&](double y) { return std::exp(x - y) * g(y); }, x, 1.0, abs_tol);
  return acc;
}

}  // namespace colloc
