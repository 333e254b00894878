#ifndef KOOPMAN_INTEGRATE_HPP
#define KOOPMAN_INTEGRATE_HPP

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "koopman/ode.hpp"
#include "koopman/solution.hpp"

namespace koopman {

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = std::numeric_limits<double>::infinity();
  double t0 = 0.0;
  double t1 = 1.0;
};

struct IntegrationPoint {
  double t, x, y;
};

struct IntegrationResult {
  std::vector<IntegrationPoint> points;  // accepted steps, including t0
  bool failed = false;                   // step-size underflow or non-finite state
  double failure_time = 0.0;             // last good time when failed
  std::size_t n_accepted = 0;
  std::size_t n_rejected = 0;
};

/// Adaptive Dormand-Prince 5(4) with PI step control. Integrates backward
/// when t1 < t0. A blow-up shows up as step-size underflow; the result
/// carries the last good time instead of throwing.
IntegrationResult integrate(const QuadraticODE& ode, const InitialCondition& ic,
                            const IntegratorConfig& cfg);

/// Fixed-step classical RK4, for deterministic regression fixtures.
IntegrationResult integrate_rk4(const QuadraticODE& ode, const InitialCondition& ic,
                                double t0, double t1, std::size_t n_steps);

/// Same CSV schema as the analytical trajectory writer, so the two outputs
/// diff directly; numeric samples carry zero imaginary residual.
void write_integration_csv(std::ostream& os, const IntegrationResult& result);

struct CrossCheckReport {
  double max_abs_err_x = 0.0;
  double max_abs_err_y = 0.0;
  double t_worst = 0.0;
  std::size_t n_steps = 0;
  bool integrator_failed = false;
  double failure_time = 0.0;
  double compare_until = 0.0;  // window end after blow-up truncation

  std::string to_json_text() const;
};

/// Integrates the raw ODE and samples the analytical solution at the
/// accepted steps. The comparison window ends 0.1 time units before any
/// detected blow-up.
CrossCheckReport cross_check(const ClosedFormSolution& sol, const QuadraticODE& ode,
                             const IntegratorConfig& cfg);

/// max |phi(x(t), y(t)) - phi(x0, y0) e^(lambda t)| along a numerically
/// integrated trajectory; the direct test of the eigenfunction's linear
/// dynamics. Works for general-form ODEs with constants.
double linearity_check(const QuadraticODE& ode, const ExactEigenpair& pair,
                       const InitialCondition& ic, const IntegratorConfig& cfg);

} // namespace koopman

#endif
