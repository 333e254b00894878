#ifndef KOOPMAN_RESIDUAL_HPP
#define KOOPMAN_RESIDUAL_HPP

#include <array>
#include <utility>

#include "koopman/eigenfunction.hpp"
#include "koopman/errors.hpp"
#include "koopman/ode.hpp"

namespace koopman {

/// The ten coefficient equations of the eigenfunction system, ordered
/// constant, y, y^2, y^3, x, xy, xy^2, x^2, x^2 y, x^3.
template <class S>
using ResidualVector = std::array<S, 10>;

inline constexpr std::array<Monomial, 10> kResidualMonomials = {{
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0},
    {1, 1}, {1, 2}, {2, 0}, {2, 1}, {3, 0},
}};

template <class S>
bool residual_is_zero(const ResidualVector<S>& r) {
  for (const S& v : r)
    if (!scalar_is_zero(v)) return false;
  return true;
}

/// Eigenfunction PDE residual as a polynomial identity in (x, y):
///   Omega = (Q dP/dx - P dQ/dx) p1 + (Q dP/dy - P dQ/dy) p2 - lambda P Q,
/// built term-by-term from polynomial arithmetic. (lambda, phi) is an
/// eigenpair exactly when Omega is the zero polynomial. Constants a0, b0
/// contribute extra low-order terms when present.
template <class S>
BivariatePoly<S> omega_expand_general(const QuadraticODE& ode,
                                      const RationalEigenfunction<S>& ef,
                                      const S& lambda) {
  const BivariatePoly<S> P = ef.numerator_poly();
  const BivariatePoly<S> Q = ef.denominator_poly();
  const BivariatePoly<S> p1 = p1_poly<S>(ode);
  const BivariatePoly<S> p2 = p2_poly<S>(ode);
  const BivariatePoly<S> wx = Q * P.diff_x() - P * Q.diff_x();
  const BivariatePoly<S> wy = Q * P.diff_y() - P * Q.diff_y();
  return wx * p1 + wy * p2 - (P * Q).scaled(lambda);
}

template <class S>
BivariatePoly<S> omega_expand(const QuadraticODE& ode,
                              const RationalEigenfunction<S>& ef,
                              const S& lambda) {
  if (!ode.normal_form())
    raise(ErrorKind::Precondition, "omega_expand needs a normal-form ODE (a0 = b0 = 0)");
  return omega_expand_general(ode, ef, lambda);
}

/// Coefficient extraction in the fixed residual order. The support of any
/// linear-rational Omega lies inside the ten listed monomials.
template <class S>
ResidualVector<S> residual_from_omega(const BivariatePoly<S>& omega) {
  ResidualVector<S> out;
  std::size_t found = 0;
  for (std::size_t i = 0; i < kResidualMonomials.size(); ++i) {
    out[i] = omega.coeff(kResidualMonomials[i].dx, kResidualMonomials[i].dy);
    if (!scalar_is_zero(out[i])) ++found;
  }
  if (found != omega.term_count())
    raise(ErrorKind::Internal, "omega has support outside the ten residual monomials");
  return out;
}

/// The ten closed-form coefficient expressions of the eigenfunction system,
/// evaluated directly. Independent of omega_expand; the two agree
/// entry-by-entry for normal-form ODEs.
template <class S>
ResidualVector<S> h_residual(const QuadraticODE& ode,
                             const RationalEigenfunction<S>& ef,
                             const S& lambda) {
  if (!ode.normal_form())
    raise(ErrorKind::Precondition, "h_residual needs a normal-form ODE (a0 = b0 = 0)");

  const S a1 = scalar_from_rational<S>(ode.a1), a2 = scalar_from_rational<S>(ode.a2),
          a3 = scalar_from_rational<S>(ode.a3), a4 = scalar_from_rational<S>(ode.a4),
          a5 = scalar_from_rational<S>(ode.a5);
  const S b1 = scalar_from_rational<S>(ode.b1), b2 = scalar_from_rational<S>(ode.b2),
          b3 = scalar_from_rational<S>(ode.b3), b4 = scalar_from_rational<S>(ode.b4),
          b5 = scalar_from_rational<S>(ode.b5);
  const S &c0 = ef.c0, &c1 = ef.c1, &c2 = ef.c2;
  const S &d0 = ef.d0, &d1 = ef.d1, &d2 = ef.d2;
  const S& l = lambda;

  ResidualVector<S> h;
  // 1
  h[0] = scalar_zero<S>() - c0 * d0 * l;
  // y
  h[1] = a2 * c1 * d0 + b2 * c2 * d0 - a2 * c0 * d1 - b2 * c0 * d2 - c2 * d0 * l - c0 * d2 * l;
  // y^2
  h[2] = a5 * c1 * d0 + b5 * c2 * d0 - a5 * c0 * d1 - a2 * c2 * d1 - b5 * c0 * d2 + a2 * c1 * d2 - c2 * d2 * l;
  // y^3
  h[3] = a5 * c1 * d2 - a5 * c2 * d1;
  // x
  h[4] = a1 * c1 * d0 + b1 * c2 * d0 - a1 * c0 * d1 - b1 * c0 * d2 - c1 * d0 * l - c0 * d1 * l;
  // xy
  h[5] = a4 * c1 * d0 + b4 * c2 * d0 - a4 * c0 * d1 - a1 * c2 * d1 + b2 * c2 * d1 - b4 * c0 * d2 +
         a1 * c1 * d2 - b2 * c1 * d2 - c2 * d1 * l - c1 * d2 * l;
  // xy^2
  h[6] = b5 * c2 * d1 - a4 * c2 * d1 + a4 * c1 * d2 - b5 * c1 * d2;
  // x^2
  h[7] = a3 * c1 * d0 + b3 * c2 * d0 - a3 * c0 * d1 + b1 * c2 * d1 - b3 * c0 * d2 - b1 * c1 * d2 - c1 * d1 * l;
  // x^2 y
  h[8] = b4 * c2 * d1 - a3 * c2 * d1 + a3 * c1 * d2 - b4 * c1 * d2;
  // x^3
  h[9] = b3 * c2 * d1 - b3 * c1 * d2;
  return h;
}

} // namespace koopman

#endif
