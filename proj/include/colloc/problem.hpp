#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "colloc/expr.hpp"

namespace colloc {

/*
  Solutions of the kernel equation live in the class

      h = a_{-1} delta(x+1) + a_0 delta(x-1) + g(x)

  with g continuous.  a_minus1/a_0 are the point-source strengths at the two
  endpoints, g is the continuous part.
*/
struct ExactSolution {
  double a_minus1 = 0.0;
  double a_0 = 0.0;
  std::function<double(double)> g;
};

struct Problem {
  std::string name;      // "example-1".."example-4" or "user"
  Expr f;                // right-hand side
  std::optional<ExactSolution> exact;
};

// the four built-in reference problems; their continuous parts are stored as
// parsed expressions (see src/problem.cpp for the closed forms)
std::vector<Problem> builtin_examples();

/*
  Closed-form inversion of the kernel map for twice-differentiable data:

      a_{-1} = (f(-1) - f'(-1)) / 2
      a_0    = (f'(1) + f(1)) / 2
      g(x)   = (f(x) - f''(x)) / 2

  Derivatives come from forward-mode jets on the parsed expression.
*/
ExactSolution exact_from_f(const Expr& f);

// forward map applied to an exact solution via adaptive quadrature (oracle
// use only): point-source tails plus the two one-sided integrals of g
double apply_R_to_exact(const ExactSolution& e, double x, double abs_tol = 1e-12);

}  // namespace colloc
