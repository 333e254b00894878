#ifndef KOOPMAN_SOLUTION_HPP
#define KOOPMAN_SOLUTION_HPP

#include <complex>
#include <iosfwd>
#include <optional>
#include <vector>

#include "koopman/eigen.hpp"

namespace koopman {

struct InitialCondition {
  Rational x0, y0;

  double x0_d() const { return x0.to_double(); }
  double y0_d() const { return y0.to_double(); }
};

struct TrajectorySample {
  double t = 0;
  double x = 0;
  double y = 0;
  double im_residual = 0;  // max |imaginary part| discarded from (x, y)
  bool near_pole = false;
};

struct TrajectoryOptions {
  double near_pole_radius = 1e-9;  // flag samples with |denominator| below this
};

struct BlowupOptions {
  double scan_step = 1e-3;
  double bisect_tol = 1e-8;
  double realness_tol = 1e-9;    // relative bound on the denominator's phase residual
  double removable_tol = 1e-9;   // relative numerator bound for removable roots
};

/// False when phi2 = alpha * phi1 or phi2 = alpha / phi1 (same alpha across
/// numerator and denominator blocks); decided exactly.
bool independence_check(const ExactEigenpair& p1, const ExactEigenpair& p2);

/// P(x, y) / Q(x, y); pole when Q vanishes at the point.
QuadExt eval_eigenfunction(const ExactEigenfunction& ef, const Rational& x, const Rational& y);
std::complex<double> eval_eigenfunction(const ComplexEigenfunction& ef,
                                        std::complex<double> x, std::complex<double> y);

/// Two independent eigenpairs with the eigenfunction initial values
/// phi_i(x0, y0) — everything needed to evaluate the closed-form solution.
class ClosedFormSolution {
public:
  ClosedFormSolution(ExactEigenpair pair1, ExactEigenpair pair2, InitialCondition ic);

  const ExactEigenpair& pair1() const { return pair1_; }
  const ExactEigenpair& pair2() const { return pair2_; }
  const QuadExt& phi1_0() const { return phi1_0_; }
  const QuadExt& phi2_0() const { return phi2_0_; }
  const InitialCondition& ic() const { return ic_; }
  std::optional<Family> family() const { return family_; }
  void set_family(Family f) { family_ = f; }

  // Long-double coefficient views for the numeric evaluators.
  struct View {
    std::complex<long double> c0, c1, c2, d0, d1, d2;
    std::complex<long double> k0, k1, k2, m0, m1, m2;
    std::complex<long double> lambda1, lambda2;
    std::complex<long double> phi1_0, phi2_0;
  };
  const View& view() const { return view_; }

private:
  ExactEigenpair pair1_, pair2_;
  QuadExt phi1_0_, phi2_0_;
  InitialCondition ic_;
  std::optional<Family> family_;
  View view_;
};

/// Classifier-gated assembly: membership, eigenpairs, independence, and the
/// eigenfunction initial values, with errors propagated.
ClosedFormSolution build_solution(const QuadraticODE& ode, const InitialCondition& ic,
                                  std::optional<Family> force = std::nullopt);

/// The unique (x, y) with phi1(x,y) = phi1 and phi2(x,y) = phi2.
std::pair<QuadExt, QuadExt> invert_to_state(const ClosedFormSolution& sol,
                                            const QuadExt& phi1, const QuadExt& phi2);
std::pair<std::complex<double>, std::complex<double>> invert_to_state(
    const ClosedFormSolution& sol, std::complex<double> phi1, std::complex<double> phi2);

/// Substitutes phi_i(0) e^(lambda_i t) into the state inversion. Poles are
/// flagged per sample, never thrown.
std::vector<TrajectorySample> evaluate_trajectory(const ClosedFormSolution& sol,
                                                  const std::vector<double>& times,
                                                  const TrajectoryOptions& opts = {});

struct DenominatorRoot {
  double t;
  bool removable;  // both trajectory numerators vanish there as well
};

/// All sign-change roots of the shared trajectory denominator on (0, t_max].
std::vector<DenominatorRoot> denominator_roots(const ClosedFormSolution& sol, double t_max,
                                               const BlowupOptions& opts = {});

/// Earliest non-removable denominator root: the finite escape time.
std::optional<double> blowup_time(const ClosedFormSolution& sol, double t_max,
                                  const BlowupOptions& opts = {});

/// Header t,x,y,im_residual,near_pole; 17 significant digits.
void write_trajectory_csv(std::ostream& os, const std::vector<TrajectorySample>& samples);

std::vector<double> linspace(double t0, double t1, std::size_t n);

} // namespace koopman

#endif
