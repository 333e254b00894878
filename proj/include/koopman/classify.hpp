#ifndef KOOPMAN_CLASSIFY_HPP
#define KOOPMAN_CLASSIFY_HPP

#include <array>
#include <random>
#include <vector>

#include "koopman/ode.hpp"

namespace koopman {

enum class Family { L, X };

/// One violated defining polynomial: which family, which polynomial
/// (index into the documented order), and its nonzero value.
struct ViolatedConstraint {
  Family family;
  int index;
  Rational residual;
};

struct FamilyMembership {
  bool in_L = false;
  bool in_X = false;
  std::array<Rational, 4> residuals_L;
  std::array<Rational, 9> residuals_X;
  std::vector<ViolatedConstraint> violated;

  bool solvable() const { return in_L || in_X; }
};

/// Values of the four linear polynomials b3, a5, a4 - b5, a3 - b4.
/// Membership in L is their exact simultaneous vanishing.
std::pair<bool, std::array<Rational, 4>> membership_L(const QuadraticODE& ode);

/// Values of the nine quadratics cutting out X, in the documented order
/// starting with 4 a5 b3 - a4 b4.
std::pair<bool, std::array<Rational, 9>> membership_X(const QuadraticODE& ode);

/// Both checks plus the violation list. tol = 0 decides exactly; a positive
/// tol treats |residual| < tol as vanishing (for decimal CLI inputs).
FamilyMembership classify(const QuadraticODE& ode, const Rational& tol = Rational(0));

/// The X family solved for (a3, a5, b3, b5) in terms of the six free
/// coefficients; the result satisfies membership_X exactly.
QuadraticODE x_parameterization(const Rational& a1, const Rational& a2,
                                const Rational& a4, const Rational& b1,
                                const Rational& b2, const Rational& b4);

/// The L family built from its six free coefficients (a3 = b4, b5 = a4,
/// a5 = b3 = 0).
QuadraticODE l_parameterization(const Rational& a1, const Rational& a2,
                                const Rational& a4, const Rational& b1,
                                const Rational& b2, const Rational& b4);

struct NormalFormResult {
  QuadraticODE ode;              // transformed system, residual constants included
  Rational u_offset, v_offset;   // u = x + u_offset, v = y + v_offset
  bool constants_vanished;       // whether the transformed a0, b0 are zero
};

/// Shift substitution u = (a1 x - a0)/a1, v = (b1 y - b0)/b1, re-expanded
/// symbolically. The quadratic terms can reintroduce constants; the result
/// reports them instead of asserting they vanish.
NormalFormResult to_normal_form(const QuadraticODE& ode);

/// Seeded small-rational samplers. Degenerate strata (vanishing formula
/// denominators, zero discriminant) are rejected and resampled, so every
/// returned ODE admits two independent eigenpairs.
Rational sample_rational(std::mt19937_64& rng, long max_num = 6, long max_den = 4);
QuadraticODE sample_L(std::mt19937_64& rng);
QuadraticODE sample_X(std::mt19937_64& rng);
QuadraticODE sample_generic(std::mt19937_64& rng);

} // namespace koopman

#endif
