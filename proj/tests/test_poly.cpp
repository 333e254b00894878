#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "koopman/bipoly.hpp"
#include "koopman/eigenfunction.hpp"
#include "koopman/ode.hpp"
#include "koopman/residual.hpp"

using namespace koopman;

namespace {

Rational rr(std::mt19937_64& rng, long span = 4) {
  std::uniform_int_distribution<long> n(-span, span);
  std::uniform_int_distribution<long> d(1, 3);
  return Rational(n(rng), d(rng));
}

BivariatePoly<Rational> random_poly(std::mt19937_64& rng, int max_deg = 3) {
  BivariatePoly<Rational> p;
  std::uniform_int_distribution<int> e(0, max_deg);
  for (int k = 0; k < 6; ++k) p.add_term(e(rng), e(rng), rr(rng));
  return p;
}

RationalEigenfunction<Rational> random_ef(std::mt19937_64& rng) {
  RationalEigenfunction<Rational> ef;
  ef.c0 = rr(rng); ef.c1 = rr(rng); ef.c2 = rr(rng);
  ef.d0 = rr(rng); ef.d1 = rr(rng); ef.d2 = rr(rng);
  return ef;
}

// dx/dt = -4x - 2y + x^2 - (2/3)y^2, dy/dt = 3x + y + 2xy + (5/3)y^2
QuadraticODE x_real_ode() {
  QuadraticODE o;
  o.a1 = Rational(-4); o.a2 = Rational(-2); o.a3 = Rational(1); o.a5 = Rational(-2, 3);
  o.b1 = Rational(3); o.b2 = Rational(1); o.b4 = Rational(2); o.b5 = Rational(5, 3);
  return o;
}

// dx/dt = x - 2y + 2x^2 + xy, dy/dt = 3x + y + 2xy + y^2
QuadraticODE l_blowup_ode() {
  return QuadraticODE::from_coeffs({1, -2, 2, 1, 0}, {3, 1, 0, 2, 1});
}

} // namespace

TEST_CASE("poly arithmetic basics") {
  using P = BivariatePoly<Rational>;
  const P x = P::term(Rational(1), 1, 0);
  const P y = P::term(Rational(1), 0, 1);

  // d/dx (x^2 y) = 2xy
  const P x2y = P::term(Rational(1), 2, 1);
  CHECK(x2y.diff_x().coeff(1, 1) == Rational(2));
  CHECK(x2y.diff_x().term_count() == 1);
  CHECK(x2y.diff_y().coeff(2, 0) == Rational(1));

  // (x + y)(x - y) = x^2 - y^2
  const P prod = (x + y) * (x - y);
  CHECK(prod.coeff(2, 0) == Rational(1));
  CHECK(prod.coeff(0, 2) == Rational(-1));
  CHECK(prod.term_count() == 2);

  CHECK((x + y).eval(Rational(2), Rational(3)) == Rational(5));
  CHECK(prod.total_degree() == 2);
}

TEST_CASE("poly eval with complex coefficients") {
  // x + c2 y at (0, 1) with c2 = -i sqrt(6)/3
  using C = std::complex<double>;
  BivariatePoly<C> p;
  p.add_term(1, 0, C(1.0, 0.0));
  const C c2(0.0, -std::sqrt(6.0) / 3.0);
  p.add_term(0, 1, c2);
  const C v = p.eval(C(0.0), C(1.0));
  CHECK(std::abs(v - c2) == 0.0);
}

TEST_CASE("sparse map never stores zeros (property)") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng);
    const auto b = random_poly(rng);
    for (const auto& p : {a + b, a - b, a * b, a.diff_x(), a.diff_y(), a.scaled(rr(rng))}) {
      for (const auto& [m, c] : p.terms()) CHECK(!c.is_zero());
    }
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("shifted equals substitution (property)") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_poly(rng);
    const Rational sx = rr(rng), sy = rr(rng), x = rr(rng), y = rr(rng);
    CHECK(p.shifted(sx, sy).eval(x, y) == p.eval(x + sx, y + sy));
  }
}

TEST_CASE("deterministic rendering") {
  BivariatePoly<Rational> p;
  p.add_term(0, 1, Rational(2));
  p.add_term(3, 0, Rational(1));
  p.add_term(1, 1, Rational(-1, 2));
  CHECK(p.str() == "(1)*x^3 + (-1/2)*x*y + (2)*y");
  CHECK(BivariatePoly<Rational>().str() == "0");
}

TEST_CASE("omega vanishes exactly on a known eigenpair") {
  // phi = (-1 + x + y)/(x + y) with lambda = 1
  RationalEigenfunction<Rational> ef;
  ef.c0 = Rational(-1); ef.c1 = Rational(1); ef.c2 = Rational(1);
  ef.d1 = Rational(1); ef.d2 = Rational(1);
  const auto omega = omega_expand<Rational>(x_real_ode(), ef, Rational(1));
  CHECK(omega.is_zero());

  // the trivial eigenfunction gives the zero polynomial for any lambda
  RationalEigenfunction<Rational> zero_ef;
  zero_ef.d0 = Rational(1); zero_ef.d1 = Rational(1); zero_ef.d2 = Rational(1);
  CHECK(omega_expand<Rational>(x_real_ode(), zero_ef, Rational(7)).is_zero());
}

TEST_CASE("omega detects a wrong eigenvalue") {
  RationalEigenfunction<Rational> ef;
  ef.c0 = Rational(-1); ef.c1 = Rational(1); ef.c2 = Rational(1);
  ef.d1 = Rational(1); ef.d2 = Rational(1);
  const auto omega = omega_expand<Rational>(x_real_ode(), ef, Rational(2));
  CHECK(!omega.is_zero());
  // hand expansion of the x coefficient: a1 c1 d0 + b1 c2 d0 - a1 c0 d1
  //   - b1 c0 d2 - c1 d0 l - c0 d1 l = -4 + 3 + 0 + 2 = 1 at l = 2
  CHECK(omega.coeff(1, 0) == Rational(1));
}

TEST_CASE("h_residual matches the displayed equations") {
  // trivial solution c = d = 0, lambda = 0
  RationalEigenfunction<Rational> trivial;
  CHECK(residual_is_zero(h_residual<Rational>(x_real_ode(), trivial, Rational(0))));

  // known eigenpair: all ten entries zero
  RationalEigenfunction<Rational> ef;
  ef.c0 = Rational(-1); ef.c1 = Rational(1); ef.c2 = Rational(1);
  ef.d1 = Rational(1); ef.d2 = Rational(1);
  CHECK(residual_is_zero(h_residual<Rational>(x_real_ode(), ef, Rational(1))));

  // perturbing lambda by +1 breaks it; for this eigenfunction the x entry is
  //   d0 (a1 + b1 c2 - lambda) with d0 = 0 here, so use the y entry instead:
  //   a2 c1 d0 + b2 c2 d0 - a2 c0 d1 - b2 c0 d2 - c2 d0 l - c0 d2 l
  //   = 0 + 0 - 2 + 1 + 0 + 2 = 1 at l = 2
  const auto h = h_residual<Rational>(x_real_ode(), ef, Rational(2));
  CHECK(!residual_is_zero(h));
  CHECK(h[1] == Rational(1));
}

TEST_CASE("h_residual detects perturbed lambda on an exact quadext pair") {
  // lambda1 = 1 - sqrt(-6) for the L-family system; lambda1 + 1 must fail
  // with x entry d0 (a1 + b1 c2 - lambda) = -7 * (-1) = 7
  const QuadExt delta = QuadExt::sqrt_of(Rational(-24));
  const QuadExt lambda1 = (QuadExt(Rational(2)) - delta) * QuadExt(Rational(1, 2));
  RationalEigenfunction<QuadExt> ef;
  ef.c1 = QuadExt(Rational(1));
  ef.c2 = (QuadExt(Rational(0)) - delta) * QuadExt(Rational(1, 6));
  ef.d0 = QuadExt(Rational(-7));
  ef.d1 = QuadExt(Rational(1));
  ef.d2 = QuadExt(Rational(-5));
  CHECK(residual_is_zero(h_residual<QuadExt>(l_blowup_ode(), ef, lambda1)));

  const auto h = h_residual<QuadExt>(l_blowup_ode(), ef, lambda1 + QuadExt(Rational(1)));
  CHECK(!residual_is_zero(h));
  CHECK(h[4] == QuadExt(Rational(7)));
}

TEST_CASE("omega coefficients equal h_residual entry-by-entry (property)") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    QuadraticODE ode;
    ode.a1 = rr(rng); ode.a2 = rr(rng); ode.a3 = rr(rng); ode.a4 = rr(rng); ode.a5 = rr(rng);
    ode.b1 = rr(rng); ode.b2 = rr(rng); ode.b3 = rr(rng); ode.b4 = rr(rng); ode.b5 = rr(rng);
    const auto ef = random_ef(rng);
    const Rational lambda = rr(rng);
    const auto from_omega = residual_from_omega(omega_expand<Rational>(ode, ef, lambda));
    const auto direct = h_residual<Rational>(ode, ef, lambda);
    for (int k = 0; k < 10; ++k) CHECK(from_omega[k] == direct[k]);
  }
}

TEST_CASE("omega is linear in the numerator coefficients and affine in lambda") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 50; ++i) {
    QuadraticODE ode;
    ode.a1 = rr(rng); ode.a2 = rr(rng); ode.a3 = rr(rng); ode.a4 = rr(rng); ode.a5 = rr(rng);
    ode.b1 = rr(rng); ode.b2 = rr(rng); ode.b3 = rr(rng); ode.b4 = rr(rng); ode.b5 = rr(rng);
    const auto ef = random_ef(rng);
    const Rational lambda = rr(rng);

    // Omega(2c) = 2 Omega(c) with d and lambda fixed
    auto doubled = ef;
    doubled.c0 = ef.c0 * Rational(2);
    doubled.c1 = ef.c1 * Rational(2);
    doubled.c2 = ef.c2 * Rational(2);
    const auto lhs = omega_expand<Rational>(ode, doubled, lambda);
    const auto rhs = omega_expand<Rational>(ode, ef, lambda).scaled(Rational(2));
    CHECK((lhs - rhs).is_zero());

    // Omega(lambda) - Omega(lambda + 1) = P*Q
    const auto d0 = omega_expand<Rational>(ode, ef, lambda);
    const auto d1 = omega_expand<Rational>(ode, ef, lambda + Rational(1));
    const auto pq = ef.numerator_poly() * ef.denominator_poly();
    CHECK((d0 - d1 - pq).is_zero());
  }
}

TEST_CASE("general-form omega accepts constants") {
  // dx/dt = xy, dy/dt = y^2 - x - 1 with phi = x/(1 + x + y), lambda = 1
  QuadraticODE ode;
  ode.a4 = Rational(1);
  ode.b0 = Rational(-1); ode.b1 = Rational(-1); ode.b5 = Rational(1);

  RationalEigenfunction<Rational> ef;
  ef.c1 = Rational(1);
  ef.d0 = Rational(1); ef.d1 = Rational(1); ef.d2 = Rational(1);
  CHECK(omega_expand_general<Rational>(ode, ef, Rational(1)).is_zero());

  // normal-form entry point refuses the constants
  CHECK_THROWS_AS(omega_expand<Rational>(ode, ef, Rational(1)), Error);
  CHECK_THROWS_AS(h_residual<Rational>(ode, ef, Rational(1)), Error);
}
