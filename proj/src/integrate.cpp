#include "koopman/integrate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "koopman/errors.hpp"

namespace koopman {

namespace {

struct Rhs {
  double a0, a1, a2, a3, a4, a5;
  double b0, b1, b2, b3, b4, b5;

  explicit Rhs(const QuadraticODE& o)
      : a0(o.a0.to_double()), a1(o.a1.to_double()), a2(o.a2.to_double()),
        a3(o.a3.to_double()), a4(o.a4.to_double()), a5(o.a5.to_double()),
        b0(o.b0.to_double()), b1(o.b1.to_double()), b2(o.b2.to_double()),
        b3(o.b3.to_double()), b4(o.b4.to_double()), b5(o.b5.to_double()) {}

  void operator()(double x, double y, double& fx, double& fy) const {
    fx = a0 + a1 * x + a2 * y + a3 * x * x + a4 * x * y + a5 * y * y;
    fy = b0 + b1 * x + b2 * y + b3 * x * x + b4 * x * y + b5 * y * y;
  }
};

// Dormand-Prince 5(4) tableau (autonomous form; stage times unused).
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
// Row 7 doubles as the 5th-order weights (FSAL); e = b5 - b4.
constexpr double kE[7] = {71.0 / 57600,      0.0,        -71.0 / 16695, 71.0 / 1920,
                          -17253.0 / 339200, 22.0 / 525, -1.0 / 40};

constexpr double kStateBound = 1e12;  // past this the trajectory has escaped

} // namespace

IntegrationResult integrate(const QuadraticODE& ode, const InitialCondition& ic,
                            const IntegratorConfig& cfg) {
  if (!(cfg.rel_tol > 0) || !(cfg.abs_tol > 0))
    raise(ErrorKind::Precondition, "integrator tolerances must be positive");
  if (cfg.t1 == cfg.t0)
    raise(ErrorKind::Precondition, "integration span is empty (t0 == t1)");

  const Rhs f(ode);
  const double dir = cfg.t1 > cfg.t0 ? 1.0 : -1.0;
  const double span = std::fabs(cfg.t1 - cfg.t0);

  IntegrationResult res;
  double t = cfg.t0;
  double x = ic.x0_d(), y = ic.y0_d();
  res.points.push_back({t, x, y});

  std::array<double, 7> kx{}, ky{};
  f(x, y, kx[0], ky[0]);

  const double scale0 = std::max({std::fabs(x), std::fabs(y), 1.0});
  const double dscale = std::max({std::fabs(kx[0]), std::fabs(ky[0]), 1e-8});
  double h = dir * std::min({0.01 * scale0 / dscale, span, cfg.max_step});

  double err_prev = 1.0;
  while (dir * (cfg.t1 - t) > 0) {
    if (std::fabs(h) < 1e-14 * std::max(std::fabs(t), 1.0)) {
      res.failed = true;
      res.failure_time = t;
      return res;
    }
    if (dir * (t + h - cfg.t1) > 0) h = cfg.t1 - t;

    for (int s = 1; s < 7; ++s) {
      double xs = x, ys = y;
      for (int j = 0; j < s; ++j) {
        xs += h * kA[s][j] * kx[j];
        ys += h * kA[s][j] * ky[j];
      }
      f(xs, ys, kx[s], ky[s]);
    }

    double x5 = x, y5 = y, ex = 0, ey = 0;
    for (int s = 0; s < 6; ++s) {
      x5 += h * kA[6][s] * kx[s];
      y5 += h * kA[6][s] * ky[s];
    }
    for (int s = 0; s < 7; ++s) {
      ex += h * kE[s] * kx[s];
      ey += h * kE[s] * ky[s];
    }

    const double sx = cfg.abs_tol + cfg.rel_tol * std::max(std::fabs(x), std::fabs(x5));
    const double sy = cfg.abs_tol + cfg.rel_tol * std::max(std::fabs(y), std::fabs(y5));
    const double err = std::sqrt(0.5 * ((ex / sx) * (ex / sx) + (ey / sy) * (ey / sy)));

    if (!std::isfinite(err) || !std::isfinite(x5) || !std::isfinite(y5)) {
      res.n_rejected++;
      h *= 0.25;
      continue;
    }

    if (err <= 1.0) {
      t += h;
      x = x5;
      y = y5;
      res.points.push_back({t, x, y});
      res.n_accepted++;
      kx[0] = kx[6];  // FSAL: stage 7 is f at the accepted point
      ky[0] = ky[6];

      if (std::max(std::fabs(x), std::fabs(y)) > kStateBound) {
        res.failed = true;
        res.failure_time = t;
        return res;
      }

      const double e1 = std::max(err, 1e-10);
      const double fac =
          std::clamp(0.9 * std::pow(e1, -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0), 0.2, 5.0);
      h *= fac;
      if (std::fabs(h) > cfg.max_step) h = dir * cfg.max_step;
      err_prev = e1;
    } else {
      res.n_rejected++;
      h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 1.0);
    }
  }
  return res;
}

IntegrationResult integrate_rk4(const QuadraticODE& ode, const InitialCondition& ic,
                                double t0, double t1, std::size_t n_steps) {
  if (n_steps == 0) raise(ErrorKind::Precondition, "integrate_rk4 needs n_steps > 0");
  const Rhs f(ode);
  const double h = (t1 - t0) / static_cast<double>(n_steps);
  IntegrationResult res;
  double t = t0, x = ic.x0_d(), y = ic.y0_d();
  res.points.push_back({t, x, y});
  for (std::size_t i = 0; i < n_steps; ++i) {
    double k1x, k1y, k2x, k2y, k3x, k3y, k4x, k4y;
    f(x, y, k1x, k1y);
    f(x + 0.5 * h * k1x, y + 0.5 * h * k1y, k2x, k2y);
    f(x + 0.5 * h * k2x, y + 0.5 * h * k2y, k3x, k3y);
    f(x + h * k3x, y + h * k3y, k4x, k4y);
    x += h / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x);
    y += h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
    t = t0 + h * static_cast<double>(i + 1);
    res.points.push_back({t, x, y});
    res.n_accepted++;
  }
  return res;
}

void write_integration_csv(std::ostream& os, const IntegrationResult& result) {
  std::vector<TrajectorySample> samples;
  samples.reserve(result.points.size());
  for (const auto& p : result.points) samples.push_back({p.t, p.x, p.y, 0.0, false});
  write_trajectory_csv(os, samples);
}

std::string CrossCheckReport::to_json_text() const {
  std::ostringstream os;
  os.precision(17);
  os << "{\n"
     << "  \"max_abs_err_x\": " << max_abs_err_x << ",\n"
     << "  \"max_abs_err_y\": " << max_abs_err_y << ",\n"
     << "  \"t_worst\": " << t_worst << ",\n"
     << "  \"n_steps\": " << n_steps << ",\n"
     << "  \"integrator_failed\": " << (integrator_failed ? "true" : "false") << ",\n"
     << "  \"failure_time\": " << failure_time << ",\n"
     << "  \"compare_until\": " << compare_until << "\n"
     << "}\n";
  return os.str();
}

CrossCheckReport cross_check(const ClosedFormSolution& sol, const QuadraticODE& ode,
                             const IntegratorConfig& cfg) {
  CrossCheckReport rep;
  IntegratorConfig window = cfg;
  if (cfg.t1 > cfg.t0) {
    if (auto tb = blowup_time(sol, cfg.t1))
      window.t1 = std::min(cfg.t1, *tb - 0.1);
  }
  rep.compare_until = window.t1;

  const IntegrationResult num = integrate(ode, sol.ic(), window);
  rep.n_steps = num.n_accepted;
  rep.integrator_failed = num.failed;
  rep.failure_time = num.failure_time;

  std::vector<double> times;
  times.reserve(num.points.size());
  for (const auto& p : num.points) times.push_back(p.t);
  const std::vector<TrajectorySample> ana = evaluate_trajectory(sol, times);

  for (std::size_t i = 0; i < num.points.size(); ++i) {
    const double dx = std::fabs(num.points[i].x - ana[i].x);
    const double dy = std::fabs(num.points[i].y - ana[i].y);
    if (std::max(dx, dy) > std::max(rep.max_abs_err_x, rep.max_abs_err_y))
      rep.t_worst = num.points[i].t;
    rep.max_abs_err_x = std::max(rep.max_abs_err_x, dx);
    rep.max_abs_err_y = std::max(rep.max_abs_err_y, dy);
  }
  return rep;
}

double linearity_check(const QuadraticODE& ode, const ExactEigenpair& pair,
                       const InitialCondition& ic, const IntegratorConfig& cfg) {
  const IntegrationResult num = integrate(ode, ic, cfg);
  const ComplexEigenpair p = complexify(pair);
  std::complex<double> phi0;
  try {
    phi0 = eval_eigenfunction(p.ef, {ic.x0_d(), 0.0}, {ic.y0_d(), 0.0});
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Pole)
      raise(ErrorKind::Pole, std::string("initial condition is a pole: ") + e.what());
    throw;
  }
  double worst = 0.0;
  for (const auto& pt : num.points) {
    std::complex<double> phi;
    try {
      phi = eval_eigenfunction(p.ef, {pt.x, 0.0}, {pt.y, 0.0});
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Pole)
        raise(ErrorKind::Pole,
              "eigenfunction pole along the trajectory at t = " + std::to_string(pt.t));
      throw;
    }
    const std::complex<double> expected = phi0 * std::exp(p.lambda * pt.t);
    worst = std::max(worst, std::abs(phi - expected));
  }
  return worst;
}

} // namespace koopman
