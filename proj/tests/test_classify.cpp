#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "koopman/classify.hpp"
#include "koopman/errors.hpp"

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

} // namespace

TEST_CASE("membership_L fixed points") {
  auto [in1, r1] = membership_L(l_blowup_ode());
  CHECK(in1);
  for (const auto& v : r1) CHECK(v.is_zero());

  auto [in2, r2] = membership_L(x_real_ode());
  CHECK(!in2);
  CHECK(r2[2] == Rational(-5, 3));  // a4 - b5

  // a linear ODE (no quadratic terms) satisfies all four polynomials
  QuadraticODE lin;
  lin.a1 = Rational(2); lin.a2 = Rational(-1); lin.b1 = Rational(1); lin.b2 = Rational(3);
  CHECK(membership_L(lin).first);

  // the zero ODE as well
  CHECK(membership_L(QuadraticODE{}).first);
}

TEST_CASE("membership_X fixed points") {
  auto [in1, r1] = membership_X(x_real_ode());
  CHECK(in1);
  for (const auto& v : r1) CHECK(v.is_zero());

  auto [in2, r2] = membership_X(l_blowup_ode());
  CHECK(!in2);
  CHECK(r2[0] == Rational(-2));  // 4 a5 b3 - a4 b4

  CHECK(membership_X(QuadraticODE{}).first);
}

TEST_CASE("membership requires normal form") {
  QuadraticODE ode = x_real_ode();
  ode.a0 = Rational(1);
  CHECK_THROWS_AS(membership_L(ode), Error);
  CHECK_THROWS_AS(membership_X(ode), Error);
}

TEST_CASE("classify collects violations and supports a tolerance") {
  const FamilyMembership m = classify(l_blowup_ode());
  CHECK(m.in_L);
  CHECK(!m.in_X);
  CHECK(m.solvable());
  CHECK(!m.violated.empty());
  for (const auto& v : m.violated) {
    CHECK(v.family == Family::X);
    CHECK(!v.residual.is_zero());
  }

  // near-miss coefficients pass only with a tolerance
  QuadraticODE near = l_blowup_ode();
  near.b3 = Rational(1, 1000000000000L);
  CHECK(!classify(near).in_L);
  CHECK(classify(near, Rational(1, 1000000000)).in_L);
}

TEST_CASE("x_parameterization reproduces the bundled X systems") {
  const QuadraticODE ex1 = x_parameterization(Rational(-4), Rational(-2), Rational(0),
                                              Rational(3), Rational(1), Rational(2));
  CHECK(ex1 == x_real_ode());

  QuadraticODE ex2_expected;
  ex2_expected.a1 = Rational(-3); ex2_expected.a2 = Rational(-2); ex2_expected.a3 = Rational(1);
  ex2_expected.a5 = Rational(-2, 3);
  ex2_expected.b1 = Rational(3); ex2_expected.b2 = Rational(1); ex2_expected.b4 = Rational(2);
  ex2_expected.b5 = Rational(4, 3);
  const QuadraticODE ex2 = x_parameterization(Rational(-3), Rational(-2), Rational(0),
                                              Rational(3), Rational(1), Rational(2));
  CHECK(ex2 == ex2_expected);

  CHECK_THROWS_AS(x_parameterization(Rational(1), Rational(0), Rational(1), Rational(1),
                                     Rational(1), Rational(1)),
                  Error);
  CHECK_THROWS_AS(x_parameterization(Rational(1), Rational(1), Rational(1), Rational(0),
                                     Rational(1), Rational(1)),
                  Error);
}

TEST_CASE("x_parameterization lands in X (property)") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> n(-6, 6);
  std::uniform_int_distribution<long> d(1, 4);
  int done = 0;
  while (done < 500) {
    const Rational a1(n(rng), d(rng)), a2(n(rng), d(rng)), a4(n(rng), d(rng));
    const Rational b1(n(rng), d(rng)), b2(n(rng), d(rng)), b4(n(rng), d(rng));
    if (a2.is_zero() || b1.is_zero()) continue;
    CHECK(membership_X(x_parameterization(a1, a2, a4, b1, b2, b4)).first);
    ++done;
  }
}

TEST_CASE("l_parameterization lands in L (property)") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<long> n(-6, 6);
  std::uniform_int_distribution<long> d(1, 4);
  for (int i = 0; i < 500; ++i) {
    const Rational a1(n(rng), d(rng)), a2(n(rng), d(rng)), a4(n(rng), d(rng));
    const Rational b1(n(rng), d(rng)), b2(n(rng), d(rng)), b4(n(rng), d(rng));
    CHECK(membership_L(l_parameterization(a1, a2, a4, b1, b2, b4)).first);
  }
}

TEST_CASE("random coefficients land in neither family (property)") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const FamilyMembership m = classify(sample_generic(rng));
    CHECK(!m.in_L);
    CHECK(!m.in_X);
  }
}

TEST_CASE("seeded samplers satisfy their own membership") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 50; ++i) {
    CHECK(membership_L(sample_L(rng)).first);
    CHECK(membership_X(sample_X(rng)).first);
  }
}

TEST_CASE("to_normal_form identity on normal-form input") {
  const NormalFormResult nf = to_normal_form(x_real_ode());
  CHECK(nf.ode == x_real_ode());
  CHECK(nf.u_offset.is_zero());
  CHECK(nf.v_offset.is_zero());
  CHECK(nf.constants_vanished);
}

TEST_CASE("to_normal_form absorbs a linear constant") {
  // dx/dt = 1 + x with every other coefficient zero
  QuadraticODE ode;
  ode.a0 = Rational(1);
  ode.a1 = Rational(1);
  const NormalFormResult nf = to_normal_form(ode);
  CHECK(nf.u_offset == Rational(-1));
  CHECK(nf.v_offset == Rational(0));
  CHECK(nf.constants_vanished);
  CHECK(nf.ode.a0.is_zero());
  CHECK(nf.ode.a1 == Rational(1));

  // a cross-coupled linear term reintroduces a constant: dy/dt = x shifted
  // by u becomes x - 1, and the result reports it instead of asserting
  QuadraticODE coupled = ode;
  coupled.b1 = Rational(1);
  const NormalFormResult nf2 = to_normal_form(coupled);
  CHECK(!nf2.constants_vanished);
  CHECK(nf2.ode.b0 == Rational(-1));
}

TEST_CASE("to_normal_form rejects a vanishing linear coefficient") {
  // dx/dt = xy has no linear x term, so its constant cannot be absorbed
  QuadraticODE ode;
  ode.a4 = Rational(1);
  ode.b0 = Rational(-1); ode.b1 = Rational(-1); ode.b5 = Rational(1);
  CHECK_THROWS_AS(to_normal_form(ode), Error);
}

TEST_CASE("to_normal_form transformed RHS agrees pointwise (property)") {
  std::mt19937_64 rng(25);
  std::uniform_int_distribution<long> n(-4, 4);
  std::uniform_int_distribution<long> d(1, 3);
  auto rr = [&] { return Rational(n(rng), d(rng)); };
  int done = 0;
  while (done < 100) {
    QuadraticODE ode = sample_generic(rng);
    ode.a0 = rr();
    ode.b0 = rr();
    if (ode.a1.is_zero() || ode.b1.is_zero()) continue;
    const NormalFormResult nf = to_normal_form(ode);
    // dx/dt at the shifted point: p1'(x, y) = p1(x + u_off, y + v_off)
    const auto p_old = p1_poly<Rational>(ode);
    const auto q_old = p2_poly<Rational>(ode);
    const auto p_new = p1_poly<Rational>(nf.ode);
    const auto q_new = p2_poly<Rational>(nf.ode);
    for (int k = 0; k < 5; ++k) {
      const Rational x = rr(), y = rr();
      CHECK(p_new.eval(x, y) == p_old.eval(x + nf.u_offset, y + nf.v_offset));
      CHECK(q_new.eval(x, y) == q_old.eval(x + nf.u_offset, y + nf.v_offset));
    }
    // the linear-term constants cancel; report flag must match the actual a0, b0
    CHECK(nf.constants_vanished == (nf.ode.a0.is_zero() && nf.ode.b0.is_zero()));
    ++done;
  }
}
