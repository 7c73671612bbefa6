#pragma once

#include <cmath>

#include "colloc/errors.hpp"

namespace colloc {

/*
  Second-order forward-mode dual number: carries a value together with the
  first and second derivative with respect to a single seed variable.
  Propagation follows the truncated Taylor rules, e.g.

      (a*b)'' = a''*b + 2*a'*b' + a*b''
      f(u)''  = f''(u)*u'^2 + f'(u)*u''
*/
struct Jet2 {
  double v = 0.0;   // value
  double d1 = 0.0;  // first derivative
  double d2 = 0.0;  // second derivative

  static Jet2 variable(double x) { return {x, 1.0, 0.0}; }
  static Jet2 constant(double c) { return {c, 0.0, 0.0}; }
};

inline Jet2 operator+(Jet2 a, Jet2 b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
inline Jet2 operator-(Jet2 a, Jet2 b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
inline Jet2 operator-(Jet2 a) { return {-a.v, -a.d1, -a.d2}; }

inline Jet2 operator*(Jet2 a, Jet2 b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

inline Jet2 operator/(Jet2 a, Jet2 b) {
  if (b.v == 0.0) throw DomainError("division by zero");
  // solve a = q*b for the derivatives of q
  double q = a.v / b.v;
  double q1 = (a.d1 - q * b.d1) / b.v;
  double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.v;
  return {q, q1, q2};
}

// chain rule helper: y = f(u) with f, f', f'' evaluated at u.v
inline Jet2 chain(Jet2 u, double f0, double f1, double f2) {
  return {f0, f1 * u.d1, f2 * u.d1 * u.d1 + f1 * u.d2};
}

inline Jet2 sin(Jet2 u) {
  double s = std::sin(u.v), c = std::cos(u.v);
  return chain(u, s, c, -s);
}

inline Jet2 cos(Jet2 u) {
  double s = std::sin(u.v), c = std::cos(u.v);
  return chain(u, c, -s, -c);
}

inline Jet2 exp(Jet2 u) {
  double e = std::exp(u.v);
  return chain(u, e, e, e);
}

inline Jet2 sqrt(Jet2 u) {
  if (u.v < 0.0) throw DomainError("sqrt of a negative value");
  if (u.v == 0.0) {
    if (u.d1 != 0.0 || u.d2 != 0.0) throw DomainError("sqrt is not differentiable at 0");
    return {0.0, 0.0, 0.0};
  }
  double r = std::sqrt(u.v);
  return chain(u, r, 0.5 / r, -0.25 / (r * u.v));
}

inline Jet2 abs(Jet2 u) {
  if (u.v > 0.0) return u;
  if (u.v < 0.0) return -u;
  if (u.d1 != 0.0 || u.d2 != 0.0) throw DomainError("abs is not differentiable at 0");
  return {0.0, 0.0, 0.0};
}

namespace detail {

inline bool is_integer(double p) { return std::nearbyint(p) == p && std::abs(p) < 1e15; }

// non-negative integer power by repeated squaring; exact chain rules fall out
// of jet multiplication and the base may be negative or zero
inline Jet2 powi(Jet2 a, long long k) {
  Jet2 acc = Jet2::constant(1.0);
  Jet2 base = a;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

}  // namespace detail

inline Jet2 pow(Jet2 a, Jet2 b) {
  if (b.d1 == 0.0 && b.d2 == 0.0) {
    double p = b.v;
    if (detail::is_integer(p)) {
      auto k = static_cast<long long>(p);
      return k >= 0 ? detail::powi(a, k) : Jet2::constant(1.0) / detail::powi(a, -k);
    }
    if (a.v <= 0.0) throw DomainError("pow: non-integer exponent requires a positive base");
    double f0 = std::pow(a.v, p);
    double f1 = p * std::pow(a.v, p - 1.0);
    double f2 = p * (p - 1.0) * std::pow(a.v, p - 2.0);
    return chain(a, f0, f1, f2);
  }
  if (a.v <= 0.0) throw DomainError("pow: non-constant exponent requires a positive base");
  // a^b = exp(b * log a)
  Jet2 la = {std::log(a.v), a.d1 / a.v, (a.d2 * a.v - a.d1 * a.d1) / (a.v * a.v)};
  return exp(b * la);
}

}  // namespace colloc
