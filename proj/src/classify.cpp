#include "koopman/classify.hpp"

#include "koopman/errors.hpp"

namespace koopman {

namespace {

void require_normal_form(const QuadraticODE& ode, const char* op) {
  if (!ode.normal_form())
    raise(ErrorKind::Precondition,
          std::string(op) + " needs a normal-form ODE (a0 = b0 = 0); apply to_normal_form first");
}

bool vanishes(const Rational& r, const Rational& tol) {
  if (tol.is_zero()) return r.is_zero();
  return r.abs() < tol;
}

Rational delta_squared(const QuadraticODE& o) {
  return o.a1 * o.a1 + Rational(4) * o.a2 * o.b1 - Rational(2) * o.a1 * o.b2 + o.b2 * o.b2;
}

} // namespace

std::pair<bool, std::array<Rational, 4>> membership_L(const QuadraticODE& ode) {
  require_normal_form(ode, "membership_L");
  std::array<Rational, 4> r = {ode.b3, ode.a5, ode.a4 - ode.b5, ode.a3 - ode.b4};
  bool in = true;
  for (const auto& v : r) in = in && v.is_zero();
  return {in, r};
}

std::pair<bool, std::array<Rational, 9>> membership_X(const QuadraticODE& ode) {
  require_normal_form(ode, "membership_X");
  const Rational &a1 = ode.a1, &a2 = ode.a2, &a3 = ode.a3, &a4 = ode.a4, &a5 = ode.a5;
  const Rational &b1 = ode.b1, &b2 = ode.b2, &b3 = ode.b3, &b4 = ode.b4, &b5 = ode.b5;
  const Rational two(2), four(4);
  std::array<Rational, 9> r = {
      four * a5 * b3 - a4 * b4,
      two * a4 * b3 - two * a3 * b4 + b4 * b4 - four * b3 * b5,
      two * a2 * b3 - a1 * b4 + b2 * b4 - two * b1 * b5,
      two * a5 * b1 - a2 * b4,
      a4 * b1 - a1 * b4 + b2 * b4 - two * b1 * b5,
      two * a3 * b1 - two * a1 * b3 + two * b2 * b3 - b1 * b4,
      a4 * a4 - four * a3 * a5 + two * a5 * b4 - two * a4 * b5,
      a2 * a4 - two * a1 * a5 + two * a5 * b2 - two * a2 * b5,
      two * a2 * a3 - a1 * a4 + a4 * b2 - a2 * b4,
  };
  bool in = true;
  for (const auto& v : r) in = in && v.is_zero();
  return {in, r};
}

FamilyMembership classify(const QuadraticODE& ode, const Rational& tol) {
  FamilyMembership m;
  m.residuals_L = membership_L(ode).second;
  m.residuals_X = membership_X(ode).second;
  m.in_L = true;
  for (int i = 0; i < 4; ++i) {
    if (!vanishes(m.residuals_L[i], tol)) {
      m.in_L = false;
      m.violated.push_back({Family::L, i, m.residuals_L[i]});
    }
  }
  m.in_X = true;
  for (int i = 0; i < 9; ++i) {
    if (!vanishes(m.residuals_X[i], tol)) {
      m.in_X = false;
      m.violated.push_back({Family::X, i, m.residuals_X[i]});
    }
  }
  return m;
}

QuadraticODE x_parameterization(const Rational& a1, const Rational& a2,
                                const Rational& a4, const Rational& b1,
                                const Rational& b2, const Rational& b4) {
  if (a2.is_zero()) raise(ErrorKind::DegenerateParameter, "x_parameterization needs a2 != 0");
  if (b1.is_zero()) raise(ErrorKind::DegenerateParameter, "x_parameterization needs b1 != 0");
  const Rational two(2);
  QuadraticODE o;
  o.a1 = a1; o.a2 = a2; o.a4 = a4;
  o.b1 = b1; o.b2 = b2; o.b4 = b4;
  o.a3 = (a1 * a4 - b2 * a4 + a2 * b4) / (two * a2);
  o.a5 = a2 * b4 / (two * b1);
  o.b3 = b1 * a4 / (two * a2);
  o.b5 = (b1 * a4 - a1 * b4 + b2 * b4) / (two * b1);
  return o;
}

QuadraticODE l_parameterization(const Rational& a1, const Rational& a2,
                                const Rational& a4, const Rational& b1,
                                const Rational& b2, const Rational& b4) {
  QuadraticODE o;
  o.a1 = a1; o.a2 = a2; o.a4 = a4;
  o.b1 = b1; o.b2 = b2; o.b4 = b4;
  o.a3 = b4;
  o.b5 = a4;
  return o;
}

NormalFormResult to_normal_form(const QuadraticODE& ode) {
  if (ode.normal_form()) return {ode, Rational(0), Rational(0), true};
  if (ode.a1.is_zero())
    raise(ErrorKind::DegenerateParameter,
          "normal-form substitution needs a1 != 0 (the shift u = (a1 x - a0)/a1 is undefined)");
  // b0 = 0 needs no v shift; otherwise the printed substitution divides by b1
  if (!ode.b0.is_zero() && ode.b1.is_zero())
    raise(ErrorKind::DegenerateParameter,
          "normal-form substitution needs b1 != 0 (the shift v = (b1 y - b0)/b1 is undefined)");

  const Rational u_off = -(ode.a0 / ode.a1);
  const Rational v_off = ode.b0.is_zero() ? Rational(0) : -(ode.b0 / ode.b1);
  const BivariatePoly<Rational> q1 = p1_poly<Rational>(ode).shifted(u_off, v_off);
  const BivariatePoly<Rational> q2 = p2_poly<Rational>(ode).shifted(u_off, v_off);

  QuadraticODE out;
  out.a0 = q1.coeff(0, 0); out.a1 = q1.coeff(1, 0); out.a2 = q1.coeff(0, 1);
  out.a3 = q1.coeff(2, 0); out.a4 = q1.coeff(1, 1); out.a5 = q1.coeff(0, 2);
  out.b0 = q2.coeff(0, 0); out.b1 = q2.coeff(1, 0); out.b2 = q2.coeff(0, 1);
  out.b3 = q2.coeff(2, 0); out.b4 = q2.coeff(1, 1); out.b5 = q2.coeff(0, 2);
  return {out, u_off, v_off, out.normal_form()};
}

Rational sample_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

QuadraticODE sample_L(std::mt19937_64& rng) {
  for (;;) {
    const Rational a1 = sample_rational(rng), a2 = sample_rational(rng),
                   a4 = sample_rational(rng), b1 = sample_rational(rng),
                   b2 = sample_rational(rng), b4 = sample_rational(rng);
    if (b1.is_zero()) continue;
    if ((a4 * b1 - b2 * b4).is_zero()) continue;
    if (delta_squared(l_parameterization(a1, a2, a4, b1, b2, b4)).is_zero()) continue;
    // a2 b1 = a1 b2 makes d0 = 0, collapsing phi1 into phi2's reciprocal class
    if ((a2 * b1 - a1 * b2).is_zero()) continue;
    return l_parameterization(a1, a2, a4, b1, b2, b4);
  }
}

QuadraticODE sample_X(std::mt19937_64& rng) {
  for (;;) {
    const Rational a1 = sample_rational(rng), a2 = sample_rational(rng),
                   a4 = sample_rational(rng), b1 = sample_rational(rng),
                   b2 = sample_rational(rng), b4 = sample_rational(rng);
    if (a2.is_zero() || b1.is_zero()) continue;
    const Rational shared = -(b1 * a4 * a4) + b4 * (a1 * a4 - b2 * a4 + a2 * b4);
    if (shared.is_zero()) continue;
    const QuadraticODE ode = x_parameterization(a1, a2, a4, b1, b2, b4);
    if (delta_squared(ode).is_zero()) continue;
    // the eigenfunction constants c0, k0 vanish on a stratum (notably
    // a1 b2 = a2 b1), collapsing phi into a constant function
    const QuadExt delta = QuadExt::sqrt_of(delta_squared(ode));
    const QuadExt lead = QuadExt(Rational(-2) * a2 * b1 * a4);
    const QuadExt A1(a1), A2(a2), A4(a4), B2(b2), B4(b4);
    const QuadExt c0num = lead + B2 * A4 * (A1 - B2 - delta) + A2 * B4 * (A1 + B2 + delta);
    const QuadExt k0num = lead + B2 * A4 * (A1 - B2 + delta) + A2 * B4 * (A1 + B2 - delta);
    if (c0num.is_zero() || k0num.is_zero()) continue;
    return ode;
  }
}

QuadraticODE sample_generic(std::mt19937_64& rng) {
  QuadraticODE o;
  o.a1 = sample_rational(rng); o.a2 = sample_rational(rng); o.a3 = sample_rational(rng);
  o.a4 = sample_rational(rng); o.a5 = sample_rational(rng);
  o.b1 = sample_rational(rng); o.b2 = sample_rational(rng); o.b3 = sample_rational(rng);
  o.b4 = sample_rational(rng); o.b5 = sample_rational(rng);
  return o;
}

} // namespace koopman
