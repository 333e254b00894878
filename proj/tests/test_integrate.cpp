#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "koopman/errors.hpp"
#include "koopman/integrate.hpp"

using namespace koopman;

namespace {

QuadraticODE l_blowup_ode() {
  return QuadraticODE::from_coeffs({1, -2, 2, 1, 0}, {3, 1, 0, 2, 1});
}

QuadraticODE x_real_ode() {
  QuadraticODE o;
  o.a1 = Rational(-4); o.a2 = Rational(-2); o.a3 = Rational(1); o.a5 = Rational(-2, 3);
  o.b1 = Rational(3); o.b2 = Rational(1); o.b4 = Rational(2); o.b5 = Rational(5, 3);
  return o;
}

QuadraticODE x_center_ode() {
  QuadraticODE o;
  o.a1 = Rational(-1); o.a2 = Rational(2); o.a3 = Rational(1); o.a4 = Rational(1);
  o.a5 = Rational(-3, 2);
  o.b1 = Rational(-2); o.b2 = Rational(1); o.b3 = Rational(-1, 2); o.b4 = Rational(3);
  o.b5 = Rational(-1);
  return o;
}

// x(t), y(t) for the rational-eigenvalue system from (-3, -4)
void x_real_reference(double t, double& x, double& y) {
  const double e1 = std::exp(t), e2 = std::exp(2 * t), e3 = std::exp(3 * t);
  const double den = 119 - 136 * e1 - 161 * e2 + 184 * e3;
  x = (476 - 816 * e1 + 322 * e2) / den;
  y = (-357 + 816 * e1 - 483 * e2) / den;
}

} // namespace

TEST_CASE("exponential growth to machine accuracy") {
  QuadraticODE ode;
  ode.a1 = Rational(1);
  IntegratorConfig cfg;
  cfg.t1 = 1.0;
  const auto res = integrate(ode, {Rational(1), Rational(0)}, cfg);
  CHECK(!res.failed);
  CHECK(res.points.back().t == 1.0);
  CHECK(std::fabs(res.points.back().x - std::exp(1.0)) <= 1e-9);
}

TEST_CASE("integrator matches the closed form of the rational-eigenvalue system") {
  IntegratorConfig cfg;
  cfg.t1 = 3.0;
  const auto res = integrate(x_real_ode(), {Rational(-3), Rational(-4)}, cfg);
  CHECK(!res.failed);
  double xr, yr;
  x_real_reference(3.0, xr, yr);
  CHECK(std::fabs(res.points.back().x - xr) <= 1e-6);
  CHECK(std::fabs(res.points.back().y - yr) <= 1e-6);
}

TEST_CASE("integrator fails at the finite escape time") {
  IntegratorConfig cfg;
  cfg.t1 = 3.0;
  const auto res = integrate(l_blowup_ode(), {Rational(0), Rational(1)}, cfg);
  CHECK(res.failed);
  CHECK(std::fabs(res.failure_time - 2.10895) < 0.05);
}

TEST_CASE("time reversal returns to the initial condition") {
  IntegratorConfig fw;
  fw.t1 = 10.0;
  const auto forward = integrate(x_center_ode(), {Rational(2), Rational(-1)}, fw);
  CHECK(!forward.failed);
  const auto& last = forward.points.back();

  IntegratorConfig bw;
  bw.t0 = 10.0;
  bw.t1 = 0.0;
  // restart from the forward endpoint, given as exact decimals
  char xs[64], ys[64];
  std::snprintf(xs, sizeof(xs), "%.17g", last.x);
  std::snprintf(ys, sizeof(ys), "%.17g", last.y);
  const auto back = integrate(x_center_ode(), {Rational::parse(xs), Rational::parse(ys)}, bw);
  CHECK(!back.failed);
  CHECK(std::fabs(back.points.back().x - 2.0) <= 1e-8);
  CHECK(std::fabs(back.points.back().y + 1.0) <= 1e-8);
}

TEST_CASE("rk4 fixed-step regression fixture") {
  QuadraticODE ode;
  ode.a1 = Rational(1);
  const auto res = integrate_rk4(ode, {Rational(1), Rational(0)}, 0.0, 1.0, 1000);
  CHECK(res.points.size() == 1001);
  CHECK(std::fabs(res.points.back().x - std::exp(1.0)) <= 1e-11);
}

TEST_CASE("cross_check on the rational-eigenvalue system") {
  const auto sol = build_solution(x_real_ode(), {Rational(-3), Rational(-4)});
  IntegratorConfig cfg;
  cfg.t1 = 3.0;
  const auto rep = cross_check(sol, x_real_ode(), cfg);
  CHECK(!rep.integrator_failed);
  CHECK(rep.max_abs_err_x < 1e-6);
  CHECK(rep.max_abs_err_y < 1e-6);
  CHECK(rep.n_steps > 10);
  CHECK(rep.compare_until == 3.0);

  // halving the tolerances must not make the agreement worse (2x slack)
  IntegratorConfig tighter = cfg;
  tighter.rel_tol /= 2;
  tighter.abs_tol /= 2;
  const auto rep2 = cross_check(sol, x_real_ode(), tighter);
  CHECK(std::max(rep2.max_abs_err_x, rep2.max_abs_err_y) <=
        2.0 * std::max(rep.max_abs_err_x, rep.max_abs_err_y));

  const std::string j = rep.to_json_text();
  CHECK(j.find("max_abs_err_x") != std::string::npos);
}

TEST_CASE("cross_check on the center over a long window") {
  const auto sol = build_solution(x_center_ode(), {Rational(2), Rational(-1)});
  IntegratorConfig cfg;
  cfg.t1 = 10.0;
  const auto rep = cross_check(sol, x_center_ode(), cfg);
  CHECK(!rep.integrator_failed);
  // periodic orbit: integration error accumulates but stays small
  CHECK(std::max(rep.max_abs_err_x, rep.max_abs_err_y) < 1e-5);
}

TEST_CASE("cross_check truncates before the blow-up") {
  const auto sol = build_solution(l_blowup_ode(), {Rational(0), Rational(1)});
  IntegratorConfig cfg;
  cfg.t1 = 3.0;
  const auto rep = cross_check(sol, l_blowup_ode(), cfg);
  CHECK(rep.compare_until < 2.109);
  CHECK(rep.compare_until > 1.9);
  CHECK(!rep.integrator_failed);
  CHECK(std::max(rep.max_abs_err_x, rep.max_abs_err_y) < 1e-4);
}

TEST_CASE("analytical evaluation survives where the integrator fails") {
  IntegratorConfig cfg;
  cfg.t1 = 3.0;
  const auto res = integrate(l_blowup_ode(), {Rational(0), Rational(1)}, cfg);
  REQUIRE(res.failed);

  const auto sol = build_solution(l_blowup_ode(), {Rational(0), Rational(1)});
  const auto samples = evaluate_trajectory(sol, {res.failure_time - 1e-3});
  CHECK(std::isfinite(samples[0].x));
  CHECK(std::isfinite(samples[0].y));
  CHECK(!samples[0].near_pole);
}

TEST_CASE("linearity_check validates the constant-term eigenpairs") {
  QuadraticODE ode;
  ode.a4 = Rational(1);
  ode.b0 = Rational(-1); ode.b1 = Rational(-1); ode.b5 = Rational(1);

  ExactEigenpair p1;
  p1.lambda = QuadExt(Rational(1));
  p1.ef.c1 = QuadExt(Rational(1));
  p1.ef.d0 = QuadExt(Rational(1));
  p1.ef.d1 = QuadExt(Rational(1));
  p1.ef.d2 = QuadExt(Rational(1));
  ExactEigenpair p2 = p1;
  p2.lambda = QuadExt(Rational(-1));
  p2.ef.d2 = QuadExt(Rational(-1));

  IntegratorConfig cfg;
  cfg.t1 = 1.0;
  const InitialCondition ic{Rational(1, 2), Rational(1, 5)};
  CHECK(linearity_check(ode, p1, ic, cfg) < 1e-8);
  CHECK(linearity_check(ode, p2, ic, cfg) < 1e-8);

  // a wrong eigenvalue is loudly visible
  ExactEigenpair wrong = p1;
  wrong.lambda = QuadExt(Rational(2));
  CHECK(linearity_check(ode, wrong, ic, cfg) > 1e-2);

  // from x0 = 0 the x-axis is invariant and phi stays identically zero
  const InitialCondition origin{Rational(0), Rational(0)};
  CHECK(linearity_check(ode, p1, origin, cfg) == 0.0);
}

TEST_CASE("numeric trajectory CSV uses the shared schema") {
  QuadraticODE ode;
  ode.a1 = Rational(1);
  const auto res = integrate_rk4(ode, {Rational(1), Rational(0)}, 0.0, 1.0, 4);
  std::ostringstream os;
  write_integration_csv(os, res);
  CHECK(os.str().rfind("t,x,y,im_residual,near_pole\n0,1,0,0,0\n", 0) == 0);
}

TEST_CASE("integrator config validation") {
  QuadraticODE ode;
  ode.a1 = Rational(1);
  IntegratorConfig cfg;
  cfg.t1 = 0.0;
  CHECK_THROWS_AS(integrate(ode, {Rational(1), Rational(0)}, cfg), Error);
  IntegratorConfig bad;
  bad.rel_tol = -1.0;
  bad.t1 = 1.0;
  CHECK_THROWS_AS(integrate(ode, {Rational(1), Rational(0)}, bad), Error);
  CHECK_THROWS_AS(integrate_rk4(ode, {Rational(1), Rational(0)}, 0, 1, 0), Error);
}
