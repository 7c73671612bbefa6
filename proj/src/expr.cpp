#include "colloc/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "colloc/errors.hpp"

namespace colloc {

Expr Expr::number(double v) {
  return Expr(std::make_shared<const Node>(Node{Kind::Number, Op::Neg, v, nullptr, nullptr}));
}
Expr Expr::variable() {
  return Expr(std::make_shared<const Node>(Node{Kind::Variable, Op::Neg, 0.0, nullptr, nullptr}));
}
Expr Expr::pi() {
  return Expr(std::make_shared<const Node>(Node{Kind::ConstPi, Op::Neg, 0.0, nullptr, nullptr}));
}
Expr Expr::e() {
  return Expr(std::make_shared<const Node>(Node{Kind::ConstE, Op::Neg, 0.0, nullptr, nullptr}));
}
Expr Expr::unary(Op op, Expr a) {
  return Expr(std::make_shared<const Node>(Node{Kind::Unary, op, 0.0, a.n_, nullptr}));
}
Expr Expr::binary(Op op, Expr a, Expr b) {
  return Expr(std::make_shared<const Node>(Node{Kind::Binary, op, 0.0, a.n_, b.n_}));
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.n_ == b.n_) return true;
  if (!a.n_ || !b.n_) return false;
  if (a.n_->kind != b.n_->kind) return false;
  switch (a.n_->kind) {
    case Expr::Kind::Number:
      return a.n_->num == b.n_->num;
    case Expr::Kind::Variable:
    case Expr::Kind::ConstPi:
    case Expr::Kind::ConstE:
      return true;
    case Expr::Kind::Unary:
      return a.n_->op == b.n_->op && Expr(a.n_->a) == Expr(b.n_->a);
    case Expr::Kind::Binary:
      return a.n_->op == b.n_->op && Expr(a.n_->a) == Expr(b.n_->a) && Expr(a.n_->b) == Expr(b.n_->b);
  }
  return false;
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected '") + c + "' " + what, pos);
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

  // decimal literal with optional fraction and exponent; "1e-5" is a literal,
  // "2*e" keeps e as the named constant
  Expr parse_number() {
    std::size_t start = pos;
    while (pos < s.size() && is_digit(s[pos])) ++pos;
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      while (pos < s.size() && is_digit(s[pos])) ++pos;
    }
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
      std::size_t mark = pos;
      ++pos;
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
      if (pos < s.size() && is_digit(s[pos])) {
        while (pos < s.size() && is_digit(s[pos])) ++pos;
      } else {
        pos = mark;  // not an exponent; leave it for the identifier lexer
      }
    }
    double v = 0.0;
    auto res = std::from_chars(s.data() + start, s.data() + pos, v);
    if (res.ec != std::errc() || res.ptr != s.data() + pos) fail("malformed number", start);
    return Expr::number(v);
  }

  Expr parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("expected expression", pos);
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Expr e = parse_sum();
      expect(')', "to close parenthesis");
      return e;
    }
    if (is_digit(c) || (c == '.' && pos + 1 < s.size() && is_digit(s[pos + 1]))) return parse_number();
    if (is_alpha(c)) {
      std::size_t start = pos;
      while (pos < s.size() && is_alpha(s[pos])) ++pos;
      std::string name(s.substr(start, pos - start));
      if (name == "x") return Expr::variable();
      if (name == "pi") return Expr::pi();
      if (name == "e") return Expr::e();
      Expr::Op op;
      if (name == "sin") op = Expr::Op::Sin;
      else if (name == "cos") op = Expr::Op::Cos;
      else if (name == "exp") op = Expr::Op::Exp;
      else if (name == "sqrt") op = Expr::Op::Sqrt;
      else if (name == "abs") op = Expr::Op::Abs;
      else fail("unknown identifier '" + name + "'", start);
      expect('(', ("after '" + name + "'").c_str());
      Expr arg = parse_sum();
      expect(')', "to close function argument");
      return Expr::unary(op, arg);
    }
    fail(std::string("unexpected character '") + c + "'", pos);
  }

  // '^' binds tighter than unary minus: -x^2 is -(x^2); the exponent may
  // itself carry a sign, so x^-2 parses
  Expr parse_power() {
    Expr base = parse_atom();
    if (accept('^')) return Expr::binary(Expr::Op::Pow, base, parse_unary());
    return base;
  }

  Expr parse_unary() {
    if (accept('-')) return Expr::unary(Expr::Op::Neg, parse_unary());
    return parse_power();
  }

  Expr parse_term() {
    Expr e = parse_unary();
    for (;;) {
      if (accept('*')) e = Expr::binary(Expr::Op::Mul, e, parse_unary());
      else if (accept('/')) e = Expr::binary(Expr::Op::Div, e, parse_unary());
      else return e;
    }
  }

  Expr parse_sum() {
    Expr e = parse_term();
    for (;;) {
      if (accept('+')) e = Expr::binary(Expr::Op::Add, e, parse_term());
      else if (accept('-')) e = Expr::binary(Expr::Op::Sub, e, parse_term());
      else return e;
    }
  }
};

}  // namespace

Expr parse_expr(std::string_view text) {
  Parser p{text};
  Expr e = p.parse_sum();
  if (!p.at_end()) p.fail("unexpected trailing input", p.pos);
  return e;
}

namespace {

int precedence(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Binary:
      switch (e.op()) {
        case Expr::Op::Add:
        case Expr::Op::Sub: return 1;
        case Expr::Op::Mul:
        case Expr::Op::Div: return 2;
        case Expr::Op::Pow: return 4;
        default: return 9;
      }
    case Expr::Kind::Unary:
      return e.op() == Expr::Op::Neg ? 3 : 9;  // named functions carry their own parens
    case Expr::Kind::Number:
      return e.value() < 0.0 ? 3 : 9;  // a negative literal prints with a leading '-'
    default:
      return 9;
  }
}

void render(const Expr& e, std::string& out);

void render_child(const Expr& c, int min_prec, std::string& out) {
  if (precedence(c) < min_prec) {
    out += '(';
    render(c, out);
    out += ')';
  } else {
    render(c, out);
  }
}

void render(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case Expr::Kind::Number: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", e.value());
      out += buf;
      return;
    }
    case Expr::Kind::Variable: out += 'x'; return;
    case Expr::Kind::ConstPi: out += "pi"; return;
    case Expr::Kind::ConstE: out += 'e'; return;
    case Expr::Kind::Unary:
      switch (e.op()) {
        case Expr::Op::Neg:
          out += '-';
          render_child(e.lhs(), 3, out);
          return;
        case Expr::Op::Sin: out += "sin"; break;
        case Expr::Op::Cos: out += "cos"; break;
        case Expr::Op::Exp: out += "exp"; break;
        case Expr::Op::Sqrt: out += "sqrt"; break;
        case Expr::Op::Abs: out += "abs"; break;
        default: break;
      }
      out += '(';
      render(e.lhs(), out);
      out += ')';
      return;
    case Expr::Kind::Binary: {
      int p = precedence(e);
      const char* sym = "?";
      // left-associative ops need parens around an equal-precedence right child;
      // '^' is right-associative so the rule flips
      int lhs_min = p, rhs_min = p + 1;
      switch (e.op()) {
        case Expr::Op::Add: sym = "+"; break;
        case Expr::Op::Sub: sym = "-"; break;
        case Expr::Op::Mul: sym = "*"; break;
        case Expr::Op::Div: sym = "/"; break;
        case Expr::Op::Pow: sym = "^"; lhs_min = p + 1; rhs_min = p; break;
        default: break;
      }
      render_child(e.lhs(), lhs_min, out);
      out += sym;
      render_child(e.rhs(), rhs_min, out);
      return;
    }
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  render(e, out);
  return out;
}

namespace {

// value-only power with the same domain rules as the jet version
double pow_value(double a, double p) {
  if (a > 0.0) return std::pow(a, p);
  if (detail::is_integer(p)) {
    if (a == 0.0 && p < 0.0) throw DomainError("pow: zero base with negative exponent");
    return std::pow(a, p);
  }
  throw DomainError("pow: non-integer exponent requires a positive base");
}

template <class T>
T eval_node(const Expr& e, double x) {
  constexpr bool jet = std::is_same_v<T, Jet2>;
  switch (e.kind()) {
    case Expr::Kind::Number:
      if constexpr (jet) return Jet2::constant(e.value()); else return e.value();
    case Expr::Kind::Variable:
      if constexpr (jet) return Jet2::variable(x); else return x;
    case Expr::Kind::ConstPi:
      if constexpr (jet) return Jet2::constant(std::numbers::pi); else return std::numbers::pi;
    case Expr::Kind::ConstE:
      if constexpr (jet) return Jet2::constant(std::numbers::e); else return std::numbers::e;
    case Expr::Kind::Unary: {
      T a = eval_node<T>(e.lhs(), x);
      switch (e.op()) {
        case Expr::Op::Neg: return -a;
        case Expr::Op::Sin: if constexpr (jet) return sin(a); else return std::sin(a);
        case Expr::Op::Cos: if constexpr (jet) return cos(a); else return std::cos(a);
        case Expr::Op::Exp: if constexpr (jet) return exp(a); else return std::exp(a);
        case Expr::Op::Sqrt:
          if constexpr (jet) return sqrt(a);
          else {
            if (a < 0.0) throw DomainError("sqrt of a negative value");
            return std::sqrt(a);
          }
        case Expr::Op::Abs: if constexpr (jet) return abs(a); else return std::abs(a);
        default: break;
      }
      break;
    }
    case Expr::Kind::Binary: {
      T a = eval_node<T>(e.lhs(), x);
      T b = eval_node<T>(e.rhs(), x);
      switch (e.op()) {
        case Expr::Op::Add: return a + b;
        case Expr::Op::Sub: return a - b;
        case Expr::Op::Mul: return a * b;
        case Expr::Op::Div:
          if constexpr (jet) return a / b;
          else {
            if (b == 0.0) throw DomainError("division by zero");
            return a / b;
          }
        case Expr::Op::Pow:
          if constexpr (jet) return pow(a, b); else return pow_value(a, b);
        default: break;
      }
      break;
    }
  }
  throw DomainError("malformed expression node");
}

}  // namespace

double eval(const Expr& e, double x) { return eval_node<double>(e, x); }

Jet2 eval_jet(const Expr& e, double x) { return eval_node<Jet2>(e, x); }

}  // namespace colloc
