#include "koopman/eigen.hpp"

#include <optional>

#include "koopman/errors.hpp"

namespace koopman {

namespace {

Rational delta_squared(const QuadraticODE& o) {
  return o.a1 * o.a1 + Rational(4) * o.a2 * o.b1 - Rational(2) * o.a1 * o.b2 + o.b2 * o.b2;
}

QuadExt half(const QuadExt& v) { return v * QuadExt(Rational(1, 2)); }

// numerator proportional to denominator: phi is a constant function
bool constant_direction(const ExactEigenfunction& f) {
  return f.c0 * f.d1 == f.c1 * f.d0 && f.c0 * f.d2 == f.c2 * f.d0 &&
         f.c1 * f.d2 == f.c2 * f.d1;
}

void reject_constant_collapse(const ExactEigenpair& p, const char* which) {
  if (constant_direction(p.ef))
    raise(ErrorKind::DegenerateParameter,
          std::string(which) +
              " collapses to a constant function (a1*b2 = a2*b1 stratum); no usable pair");
}

} // namespace

QuadExt discriminant(const QuadraticODE& ode) {
  return QuadExt::sqrt_of(delta_squared(ode));
}

FamilySpectrum family_spectrum(const QuadraticODE& ode, Family family, DeltaBranch branch) {
  QuadExt delta = discriminant(ode);
  if (branch == DeltaBranch::Negated) delta = -delta;
  const QuadExt a1(ode.a1), b2(ode.b2);
  FamilySpectrum s;
  s.delta = delta;
  s.family = family;
  if (family == Family::L) {
    s.lambda1 = half(a1 + b2 - delta);
    s.lambda2 = delta;
  } else {
    s.lambda1 = half(-a1 - b2 - delta);
    s.lambda2 = half(-a1 - b2 + delta);
  }
  return s;
}

std::pair<ExactEigenpair, ExactEigenpair> eigenpairs_L(const QuadraticODE& ode,
                                                       DeltaBranch branch) {
  if (!membership_L(ode).first)
    raise(ErrorKind::NotInFamily, "eigenpairs_L: ODE is not in family L");
  if (ode.b1.is_zero())
    raise(ErrorKind::DegenerateParameter, "eigenpairs_L: b1 = 0 (eigenfunction slope 1/(2 b1) undefined)");
  const Rational denom = ode.a4 * ode.b1 - ode.b2 * ode.b4;
  if (denom.is_zero())
    raise(ErrorKind::DegenerateParameter, "eigenpairs_L: a4*b1 - b2*b4 = 0 (d0, d2 undefined)");
  if (delta_squared(ode).is_zero())
    raise(ErrorKind::DegenerateParameter,
          "eigenpairs_L: Delta = 0 collapses the two eigenpairs (no independent pair)");

  const FamilySpectrum s = family_spectrum(ode, Family::L, branch);
  const QuadExt a1(ode.a1), b2(ode.b2);
  const QuadExt inv2b1 = QuadExt(Rational(1, 2) / ode.b1);

  ExactEigenpair p1, p2;
  p1.lambda = s.lambda1;
  p1.ef.c1 = QuadExt(1);
  p1.ef.c2 = (-a1 + b2 - s.delta) * inv2b1;
  p1.ef.d0 = QuadExt((ode.a2 * ode.b1 - ode.a1 * ode.b2) / denom);
  p1.ef.d1 = QuadExt(1);
  p1.ef.d2 = QuadExt((-(ode.a1 * ode.a4) + ode.a2 * ode.b4) / denom);

  p2.lambda = s.lambda2;
  p2.ef.c1 = QuadExt(1);
  p2.ef.c2 = (-a1 + b2 + s.delta) * inv2b1;
  p2.ef.d1 = QuadExt(1);
  p2.ef.d2 = (-a1 + b2 - s.delta) * inv2b1;
  reject_constant_collapse(p1, "eigenpairs_L: phi1");
  reject_constant_collapse(p2, "eigenpairs_L: phi2");
  return {p1, p2};
}

std::pair<ExactEigenpair, ExactEigenpair> eigenpairs_X(const QuadraticODE& ode,
                                                       DeltaBranch branch) {
  if (!membership_X(ode).first)
    raise(ErrorKind::NotInFamily, "eigenpairs_X: ODE is not in family X");
  if (ode.b1.is_zero())
    raise(ErrorKind::DegenerateParameter, "eigenpairs_X: b1 = 0 (eigenfunction slope 1/(2 b1) undefined)");
  const Rational shared =
      -(ode.b1 * ode.a4 * ode.a4) + ode.b4 * (ode.a1 * ode.a4 - ode.b2 * ode.a4 + ode.a2 * ode.b4);
  if (shared.is_zero())
    raise(ErrorKind::DegenerateParameter,
          "eigenpairs_X: -b1*a4^2 + b4*(a1*a4 - b2*a4 + a2*b4) = 0 (c0, k0 undefined)");
  if (delta_squared(ode).is_zero())
    raise(ErrorKind::DegenerateParameter,
          "eigenpairs_X: Delta = 0 collapses the two eigenpairs (no independent pair)");

  const FamilySpectrum s = family_spectrum(ode, Family::X, branch);
  const QuadExt a1(ode.a1), a2(ode.a2), a4(ode.a4), b2(ode.b2), b4(ode.b4);
  const QuadExt inv2b1 = QuadExt(Rational(1, 2) / ode.b1);
  const QuadExt inv_shared = QuadExt(Rational(1) / shared);
  const QuadExt lead = QuadExt(Rational(-2) * ode.a2 * ode.b1 * ode.a4);

  ExactEigenpair p1, p2;
  p1.lambda = s.lambda1;
  p1.ef.c0 = (lead + b2 * a4 * (a1 - b2 - s.delta) + a2 * b4 * (a1 + b2 + s.delta)) * inv_shared;
  p1.ef.c1 = QuadExt(1);
  p1.ef.c2 = (-a1 + b2 + s.delta) * inv2b1;
  p1.ef.d1 = QuadExt(1);
  p1.ef.d2 = p1.ef.c2;

  p2.lambda = s.lambda2;
  p2.ef.c0 = (lead + b2 * a4 * (a1 - b2 + s.delta) + a2 * b4 * (a1 + b2 - s.delta)) * inv_shared;
  p2.ef.c1 = QuadExt(1);
  p2.ef.c2 = (-a1 + b2 - s.delta) * inv2b1;
  p2.ef.d1 = QuadExt(1);
  p2.ef.d2 = p2.ef.c2;
  reject_constant_collapse(p1, "eigenpairs_X: phi1");  // c0 = 0 and c2 = d2
  reject_constant_collapse(p2, "eigenpairs_X: phi2");
  return {p1, p2};
}

Family solve_family(const FamilyMembership& m, std::optional<Family> force) {
  if (force) {
    if (*force == Family::L && !m.in_L)
      raise(ErrorKind::NotInFamily, "forced family L but ODE is not in L");
    if (*force == Family::X && !m.in_X)
      raise(ErrorKind::NotInFamily, "forced family X but ODE is not in X");
    return *force;
  }
  if (m.in_L) return Family::L;
  if (m.in_X) return Family::X;
  raise(ErrorKind::NotInFamily,
        "ODE is in neither L nor X; no linear rational eigenfunctions exist");
}

std::pair<ExactEigenpair, ExactEigenpair> eigenpairs(const QuadraticODE& ode,
                                                     std::optional<Family> force) {
  const Family f = solve_family(classify(ode), force);
  return f == Family::L ? eigenpairs_L(ode) : eigenpairs_X(ode);
}

ResidualVector<QuadExt> verify_eigenpair_exact(const QuadraticODE& ode,
                                               const ExactEigenpair& pair) {
  return h_residual<QuadExt>(ode, pair.ef, pair.lambda);
}

ResidualVector<std::complex<double>> verify_eigenpair_numeric(const QuadraticODE& ode,
                                                              const ExactEigenpair& pair) {
  const ComplexEigenpair p = complexify(pair);
  return residual_from_omega(omega_expand_general(ode, p.ef, p.lambda));
}

QuadraticODE ode_from_eigenpairs(const ExactEigenpair& p1, const ExactEigenpair& p2) {
  const ExactEigenfunction& f1 = p1.ef;
  const ExactEigenfunction& f2 = p2.ef;
  const QuadExt one(1);
  if (!f1.d0.is_zero() || !f2.d0.is_zero())
    raise(ErrorKind::Precondition, "ode_from_eigenpairs needs d0 = m0 = 0");
  if (f1.c1 != one || f1.d1 != one || f2.c1 != one || f2.d1 != one)
    raise(ErrorKind::Precondition, "ode_from_eigenpairs needs c1 = d1 = k1 = m1 = 1");

  using Poly = BivariatePoly<QuadExt>;
  const Poly P1 = f1.numerator_poly(), Q1 = f1.denominator_poly();
  const Poly P2 = f2.numerator_poly(), Q2 = f2.denominator_poly();
  const Poly w1x = Q1 * P1.diff_x() - P1 * Q1.diff_x();
  const Poly w1y = Q1 * P1.diff_y() - P1 * Q1.diff_y();
  const Poly w2x = Q2 * P2.diff_x() - P2 * Q2.diff_x();
  const Poly w2y = Q2 * P2.diff_y() - P2 * Q2.diff_y();

  const Poly det = w1x * w2y - w2x * w1y;
  if (det.is_zero())
    raise(ErrorKind::DependentEigenfunctions,
          "eigenfunction Jacobian determinant vanishes identically");
  if (det.total_degree() > 0)
    raise(ErrorKind::NotQuadratic, "inversion denominator is not constant: " + det.str());
  const QuadExt det0 = det.coeff(0, 0);

  const Poly g1 = (P1 * Q1).scaled(p1.lambda);
  const Poly g2 = (P2 * Q2).scaled(p2.lambda);
  const Poly n1 = g1 * w2y - g2 * w1y;
  const Poly n2 = g2 * w1x - g1 * w2x;

  for (const Poly* n : {&n1, &n2}) {
    for (const auto& [m, coeff] : n->terms()) {
      if (m.degree() > 2)
        raise(ErrorKind::NotQuadratic,
              "reconstructed right-hand side has a degree-" + std::to_string(m.degree()) +
                  " term: (" + coeff.str() + ")*x^" + std::to_string(m.dx) + "*y^" +
                  std::to_string(m.dy));
    }
  }

  auto rational_coeff = [&](const Poly& n, int dx, int dy) {
    const QuadExt v = n.coeff(dx, dy) / det0;
    if (!v.is_rational())
      raise(ErrorKind::Domain, "reconstructed coefficient is not rational: " + v.str());
    return v.rat();
  };

  if (!n1.coeff(0, 0).is_zero() || !n2.coeff(0, 0).is_zero())
    raise(ErrorKind::Internal, "reconstruction produced constant terms from d0 = m0 = 0 input");

  QuadraticODE ode;
  ode.a1 = rational_coeff(n1, 1, 0);
  ode.a2 = rational_coeff(n1, 0, 1);
  ode.a3 = rational_coeff(n1, 2, 0);
  ode.a4 = rational_coeff(n1, 1, 1);
  ode.a5 = rational_coeff(n1, 0, 2);
  ode.b1 = rational_coeff(n2, 1, 0);
  ode.b2 = rational_coeff(n2, 0, 1);
  ode.b3 = rational_coeff(n2, 2, 0);
  ode.b4 = rational_coeff(n2, 1, 1);
  ode.b5 = rational_coeff(n2, 0, 2);
  return ode;
}

bool projectively_equal(const ExactEigenfunction& a, const ExactEigenfunction& b) {
  const std::array<QuadExt, 6> u = {a.c0, a.c1, a.c2, a.d0, a.d1, a.d2};
  const std::array<QuadExt, 6> v = {b.c0, b.c1, b.c2, b.d0, b.d1, b.d2};
  bool u_zero = true, v_zero = true;
  for (int i = 0; i < 6; ++i) {
    u_zero = u_zero && u[i].is_zero();
    v_zero = v_zero && v[i].is_zero();
  }
  if (u_zero || v_zero) return u_zero == v_zero;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

} // namespace koopman
