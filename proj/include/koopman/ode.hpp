#ifndef KOOPMAN_ODE_HPP
#define KOOPMAN_ODE_HPP

#include <array>
#include <string>

#include "koopman/bipoly.hpp"
#include "koopman/rational.hpp"

namespace koopman {

/// Coefficients of the planar quadratic system
///   dx/dt = a0 + a1 x + a2 y + a3 x^2 + a4 xy + a5 y^2
///   dy/dt = b0 + b1 x + b2 y + b3 x^2 + b4 xy + b5 y^2
/// Normal form means a0 = b0 = 0.
struct QuadraticODE {
  Rational a0, a1, a2, a3, a4, a5;
  Rational b0, b1, b2, b3, b4, b5;

  bool normal_form() const { return a0.is_zero() && b0.is_zero(); }

  static QuadraticODE from_coeffs(std::array<long, 5> a, std::array<long, 5> b) {
    QuadraticODE ode;
    ode.a1 = Rational(a[0]); ode.a2 = Rational(a[1]); ode.a3 = Rational(a[2]);
    ode.a4 = Rational(a[3]); ode.a5 = Rational(a[4]);
    ode.b1 = Rational(b[0]); ode.b2 = Rational(b[1]); ode.b3 = Rational(b[2]);
    ode.b4 = Rational(b[3]); ode.b5 = Rational(b[4]);
    return ode;
  }

  friend bool operator==(const QuadraticODE& l, const QuadraticODE& r) {
    return l.a0 == r.a0 && l.a1 == r.a1 && l.a2 == r.a2 && l.a3 == r.a3 &&
           l.a4 == r.a4 && l.a5 == r.a5 && l.b0 == r.b0 && l.b1 == r.b1 &&
           l.b2 == r.b2 && l.b3 == r.b3 && l.b4 == r.b4 && l.b5 == r.b5;
  }
  friend bool operator!=(const QuadraticODE& l, const QuadraticODE& r) { return !(l == r); }

  std::string str() const;
};

/// Right-hand sides as polynomials over any coefficient scalar.
template <class S>
BivariatePoly<S> p1_poly(const QuadraticODE& ode, bool with_constant = true) {
  BivariatePoly<S> p;
  if (with_constant) p.add_term(0, 0, scalar_from_rational<S>(ode.a0));
  p.add_term(1, 0, scalar_from_rational<S>(ode.a1));
  p.add_term(0, 1, scalar_from_rational<S>(ode.a2));
  p.add_term(2, 0, scalar_from_rational<S>(ode.a3));
  p.add_term(1, 1, scalar_from_rational<S>(ode.a4));
  p.add_term(0, 2, scalar_from_rational<S>(ode.a5));
  return p;
}

template <class S>
BivariatePoly<S> p2_poly(const QuadraticODE& ode, bool with_constant = true) {
  BivariatePoly<S> p;
  if (with_constant) p.add_term(0, 0, scalar_from_rational<S>(ode.b0));
  p.add_term(1, 0, scalar_from_rational<S>(ode.b1));
  p.add_term(0, 1, scalar_from_rational<S>(ode.b2));
  p.add_term(2, 0, scalar_from_rational<S>(ode.b3));
  p.add_term(1, 1, scalar_from_rational<S>(ode.b4));
  p.add_term(0, 2, scalar_from_rational<S>(ode.b5));
  return p;
}

/// JSON object {"a": [a1..a5], "b": [b1..b5], "a0"?: , "b0"?: } where each
/// entry is an integer, a decimal, or a "p/q" string.
QuadraticODE ode_from_json_text(const std::string& text);
QuadraticODE ode_from_json_file(const std::string& path);
std::string ode_to_json_text(const QuadraticODE& ode);
void ode_to_json_file(const QuadraticODE& ode, const std::string& path);

} // namespace koopman

#endif
