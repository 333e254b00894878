#ifndef KOOPMAN_EIGEN_HPP
#define KOOPMAN_EIGEN_HPP

#include <optional>
#include <utility>

#include "koopman/classify.hpp"
#include "koopman/eigenfunction.hpp"
#include "koopman/ode.hpp"
#include "koopman/residual.hpp"

namespace koopman {

/// Discriminant and both eigenvalues of a solvable family.
struct FamilySpectrum {
  QuadExt delta;
  QuadExt lambda1;
  QuadExt lambda2;
  Family family;
};

/// Delta = sqrt(a1^2 + 4 a2 b1 - 2 a1 b2 + b2^2), canonicalized (a perfect
/// square collapses to a rational).
QuadExt discriminant(const QuadraticODE& ode);

/// Both eigenvalue formulas are symmetric under Delta -> -Delta; the
/// principal branch (positive rad coefficient) is the default.
enum class DeltaBranch { Principal, Negated };

FamilySpectrum family_spectrum(const QuadraticODE& ode, Family family,
                               DeltaBranch branch = DeltaBranch::Principal);

/// Eigenpairs for an L-family ODE, normalized with c1 = d1 = k1 = m1 = 1:
///   phi1 = (x + c2 y)/(d0 + x + d2 y),  phi2 = (x + k2 y)/(x + m2 y).
std::pair<ExactEigenpair, ExactEigenpair> eigenpairs_L(
    const QuadraticODE& ode, DeltaBranch branch = DeltaBranch::Principal);

/// Eigenpairs for an X-family ODE, normalized likewise:
///   phi1 = (c0 + x + c2 y)/(x + c2 y),  phi2 = (k0 + x + k2 y)/(x + k2 y).
std::pair<ExactEigenpair, ExactEigenpair> eigenpairs_X(
    const QuadraticODE& ode, DeltaBranch branch = DeltaBranch::Principal);

/// Family dispatch; prefers the L formulas when both memberships hold
/// (they carry fewer degeneracy conditions) unless force is given.
std::pair<ExactEigenpair, ExactEigenpair> eigenpairs(
    const QuadraticODE& ode, std::optional<Family> force = std::nullopt);

Family solve_family(const FamilyMembership& m, std::optional<Family> force = std::nullopt);

/// Exact verification through the ten closed-form equations; requires
/// normal form.
ResidualVector<QuadExt> verify_eigenpair_exact(const QuadraticODE& ode,
                                               const ExactEigenpair& pair);

/// Numeric verification through the expanded PDE residual polynomial;
/// accepts constants a0, b0.
ResidualVector<std::complex<double>> verify_eigenpair_numeric(
    const QuadraticODE& ode, const ExactEigenpair& pair);

/// Inverse reconstruction: the unique quadratic ODE whose eigenpairs these
/// are, from the determinant form of the eigenfunction equations. Requires
/// d0 = m0 = 0 and unit normalization.
QuadraticODE ode_from_eigenpairs(const ExactEigenpair& p1, const ExactEigenpair& p2);

/// Equality of eigenfunctions as projective coefficient 6-vectors.
bool projectively_equal(const ExactEigenfunction& a, const ExactEigenfunction& b);

} // namespace koopman

#endif
