#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "colloc/jet.hpp"

namespace colloc {

/*
  Immutable expression tree over a single variable x.  Nodes are shared and
  never mutated after parsing, so Expr values are cheap to copy and safe to
  evaluate concurrently from several threads.
*/
class Expr {
 public:
  enum class Kind : unsigned char { Number, Variable, ConstPi, ConstE, Unary, Binary };
  enum class Op : unsigned char { Neg, Sin, Cos, Exp, Sqrt, Abs, Add, Sub, Mul, Div, Pow };

  Expr() = default;  // empty; only assignment makes it usable

  static Expr number(double v);
  static Expr variable();
  static Expr pi();
  static Expr e();
  static Expr unary(Op op, Expr a);
  static Expr binary(Op op, Expr a, Expr b);

  bool empty() const { return n_ == nullptr; }
  Kind kind() const { return n_->kind; }
  Op op() const { return n_->op; }
  double value() const { return n_->num; }
  Expr lhs() const { return Expr(n_->a); }
  Expr rhs() const { return Expr(n_->b); }

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node {
    Kind kind;
    Op op;
    double num;
    std::shared_ptr<const Node> a, b;
  };
  explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// grammar (documented in the README):
//   expr  := term (("+"|"-") term)*
//   term  := unary (("*"|"/") unary)*
//   unary := "-" unary | power
//   power := atom ("^" unary)?          (right-associative)
//   atom  := number | "x" | "pi" | "e" | name "(" expr ")" | "(" expr ")"
// functions: sin cos exp sqrt abs; no implicit multiplication.
// throws ParseError with the byte offset of the failure.
Expr parse_expr(std::string_view text);

// canonical text form; parse(to_string(parse(t))) == parse(t)
std::string to_string(const Expr& e);

// plain evaluation; throws DomainError where the expression is undefined
double eval(const Expr& e, double x);

// value plus first and second derivative at x
Jet2 eval_jet(const Expr& e, double x);

}  // namespace colloc
