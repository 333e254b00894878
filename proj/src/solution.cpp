#include "koopman/solution.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "koopman/errors.hpp"

namespace koopman {

namespace {

using CLD = std::complex<long double>;

// Projective proportionality of coefficient 3-vectors (both nonzero).
bool proportional3(const std::array<QuadExt, 3>& u, const std::array<QuadExt, 3>& v) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

std::array<QuadExt, 3> num_block(const ExactEigenfunction& f) { return {f.c0, f.c1, f.c2}; }
std::array<QuadExt, 3> den_block(const ExactEigenfunction& f) { return {f.d0, f.d1, f.d2}; }

struct InversionParts {
  CLD num_x, num_y, den;
};

InversionParts inversion_parts(const ClosedFormSolution::View& v, CLD phi1, CLD phi2) {
  const CLD A = v.c2 - v.d2 * phi1;
  const CLD B = v.c1 - v.d1 * phi1;
  const CLD C = v.c0 - v.d0 * phi1;
  const CLD K0 = v.k0 - v.m0 * phi2;
  const CLD K1 = v.k1 - v.m1 * phi2;
  const CLD K2 = v.k2 - v.m2 * phi2;
  InversionParts p;
  p.den = A * K1 - B * K2;
  p.num_x = -(A * K0 - C * K2);
  p.num_y = B * K0 - C * K1;
  return p;
}

InversionParts parts_at_time(const ClosedFormSolution::View& v, long double t) {
  const CLD phi1 = v.phi1_0 * std::exp(v.lambda1 * CLD(t));
  const CLD phi2 = v.phi2_0 * std::exp(v.lambda2 * CLD(t));
  return inversion_parts(v, phi1, phi2);
}

} // namespace

bool independence_check(const ExactEigenpair& p1, const ExactEigenpair& p2) {
  const ExactEigenfunction& f1 = p1.ef;
  const ExactEigenfunction& f2 = p2.ef;
  if (f1.numerator_trivial() || f1.denominator_trivial() || f2.numerator_trivial() ||
      f2.denominator_trivial())
    raise(ErrorKind::Precondition, "independence_check needs nontrivial eigenfunctions");
  // phi2 = alpha * phi1: numerators and denominators each proportional
  if (proportional3(num_block(f2), num_block(f1)) &&
      proportional3(den_block(f2), den_block(f1)))
    return false;
  // phi2 = alpha / phi1: numerator against denominator and vice versa
  if (proportional3(num_block(f2), den_block(f1)) &&
      proportional3(den_block(f2), num_block(f1)))
    return false;
  return true;
}

QuadExt eval_eigenfunction(const ExactEigenfunction& ef, const Rational& x, const Rational& y) {
  const QuadExt X(x), Y(y);
  const QuadExt num = ef.c0 + ef.c1 * X + ef.c2 * Y;
  const QuadExt den = ef.d0 + ef.d1 * X + ef.d2 * Y;
  if (den.is_zero())
    raise(ErrorKind::Pole, "eigenfunction denominator vanishes at (" + x.str() + ", " + y.str() + ")");
  return num / den;
}

std::complex<double> eval_eigenfunction(const ComplexEigenfunction& ef,
                                        std::complex<double> x, std::complex<double> y) {
  const std::complex<double> num = ef.c0 + ef.c1 * x + ef.c2 * y;
  const std::complex<double> den = ef.d0 + ef.d1 * x + ef.d2 * y;
  if (std::abs(den) < 1e-14)
    raise(ErrorKind::Pole, "eigenfunction denominator vanishes near the given point");
  return num / den;
}

ClosedFormSolution::ClosedFormSolution(ExactEigenpair pair1, ExactEigenpair pair2,
                                       InitialCondition ic)
    : pair1_(std::move(pair1)), pair2_(std::move(pair2)), ic_(std::move(ic)) {
  phi1_0_ = eval_eigenfunction(pair1_.ef, ic_.x0, ic_.y0);
  phi2_0_ = eval_eigenfunction(pair2_.ef, ic_.x0, ic_.y0);

  const auto& f1 = pair1_.ef;
  const auto& f2 = pair2_.ef;
  view_.c0 = f1.c0.to_complex_long(); view_.c1 = f1.c1.to_complex_long();
  view_.c2 = f1.c2.to_complex_long(); view_.d0 = f1.d0.to_complex_long();
  view_.d1 = f1.d1.to_complex_long(); view_.d2 = f1.d2.to_complex_long();
  view_.k0 = f2.c0.to_complex_long(); view_.k1 = f2.c1.to_complex_long();
  view_.k2 = f2.c2.to_complex_long(); view_.m0 = f2.d0.to_complex_long();
  view_.m1 = f2.d1.to_complex_long(); view_.m2 = f2.d2.to_complex_long();
  view_.lambda1 = pair1_.lambda.to_complex_long();
  view_.lambda2 = pair2_.lambda.to_complex_long();
  view_.phi1_0 = phi1_0_.to_complex_long();
  view_.phi2_0 = phi2_0_.to_complex_long();
}

ClosedFormSolution build_solution(const QuadraticODE& ode, const InitialCondition& ic,
                                  std::optional<Family> force) {
  const FamilyMembership m = classify(ode);
  const Family f = solve_family(m, force);
  auto [p1, p2] = (f == Family::L) ? eigenpairs_L(ode) : eigenpairs_X(ode);
  if (!independence_check(p1, p2))
    raise(ErrorKind::DependentEigenfunctions,
          "computed eigenfunctions fall in one equivalence class");
  ClosedFormSolution sol(std::move(p1), std::move(p2), ic);
  sol.set_family(f);
  return sol;
}

std::pair<QuadExt, QuadExt> invert_to_state(const ClosedFormSolution& sol,
                                            const QuadExt& phi1, const QuadExt& phi2) {
  const auto& f1 = sol.pair1().ef;
  const auto& f2 = sol.pair2().ef;
  const QuadExt A = f1.c2 - f1.d2 * phi1;
  const QuadExt B = f1.c1 - f1.d1 * phi1;
  const QuadExt C = f1.c0 - f1.d0 * phi1;
  const QuadExt K0 = f2.c0 - f2.d0 * phi2;
  const QuadExt K1 = f2.c1 - f2.d1 * phi2;
  const QuadExt K2 = f2.c2 - f2.d2 * phi2;
  const QuadExt den = A * K1 - B * K2;
  if (den.is_zero())
    raise(ErrorKind::InversionSingularity,
          "state inversion denominator vanishes at the given eigenfunction values");
  return {-(A * K0 - C * K2) / den, (B * K0 - C * K1) / den};
}

std::pair<std::complex<double>, std::complex<double>> invert_to_state(
    const ClosedFormSolution& sol, std::complex<double> phi1, std::complex<double> phi2) {
  const InversionParts p = inversion_parts(sol.view(), CLD(phi1), CLD(phi2));
  if (p.den == CLD(0.0L))
    raise(ErrorKind::InversionSingularity,
          "state inversion denominator vanishes at the given eigenfunction values");
  const CLD x = p.num_x / p.den, y = p.num_y / p.den;
  return {std::complex<double>(static_cast<double>(x.real()), static_cast<double>(x.imag())),
          std::complex<double>(static_cast<double>(y.real()), static_cast<double>(y.imag()))};
}

std::vector<TrajectorySample> evaluate_trajectory(const ClosedFormSolution& sol,
                                                  const std::vector<double>& times,
                                                  const TrajectoryOptions& opts) {
  std::vector<TrajectorySample> out;
  out.reserve(times.size());
  for (const double t : times) {
    const InversionParts p = parts_at_time(sol.view(), static_cast<long double>(t));
    TrajectorySample s;
    s.t = t;
    s.near_pole = std::abs(p.den) < static_cast<long double>(opts.near_pole_radius);
    const CLD x = p.num_x / p.den, y = p.num_y / p.den;
    s.x = static_cast<double>(x.real());
    s.y = static_cast<double>(y.real());
    s.im_residual = static_cast<double>(std::max(std::fabs(x.imag()), std::fabs(y.imag())));
    out.push_back(s);
  }
  return out;
}

std::vector<DenominatorRoot> denominator_roots(const ClosedFormSolution& sol, double t_max,
                                               const BlowupOptions& opts) {
  if (!(t_max > 0)) raise(ErrorKind::Precondition, "denominator scan needs t_max > 0");
  const auto& v = sol.view();
  const std::size_t n = static_cast<std::size_t>(std::ceil(t_max / opts.scan_step));
  std::vector<long double> ts(n + 1);
  std::vector<CLD> dens(n + 1);
  std::vector<CLD> nums_x(n + 1), nums_y(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    ts[i] = std::min<long double>(static_cast<long double>(i) * opts.scan_step,
                                  static_cast<long double>(t_max));
    const InversionParts p = parts_at_time(v, ts[i]);
    dens[i] = p.den;
    nums_x[i] = p.num_x;
    nums_y[i] = p.num_y;
  }

  long double scale = 0;
  std::size_t i_max = 0;
  long double num_scale = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (std::abs(dens[i]) > scale) {
      scale = std::abs(dens[i]);
      i_max = i;
    }
    num_scale = std::max({num_scale, std::abs(nums_x[i]), std::abs(nums_y[i])});
  }
  if (scale == 0)
    raise(ErrorKind::Internal, "trajectory denominator vanishes identically on the scan window");

  // The denominator is a real function of t times a fixed complex phase
  // (conjugate eigenpairs make it purely imaginary); divide the phase out
  // before looking for sign changes.
  const CLD zeta = dens[i_max] / std::abs(dens[i_max]);
  std::vector<long double> s(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const CLD w = dens[i] * std::conj(zeta);
    if (std::fabs(w.imag()) > opts.realness_tol * scale)
      raise(ErrorKind::Internal,
            "trajectory denominator has non-negligible imaginary part after phase "
            "normalization; cannot scan for roots");
    s[i] = w.real();
  }

  auto s_at = [&](long double t) {
    return (parts_at_time(v, t).den * std::conj(zeta)).real();
  };
  auto neg_side = [](long double w) { return w <= 0.0L; };

  std::vector<DenominatorRoot> roots;
  for (std::size_t i = 0; i < n; ++i) {
    if (neg_side(s[i]) == neg_side(s[i + 1])) continue;
    long double lo = ts[i], hi = ts[i + 1];
    const bool lo_neg = neg_side(s[i]);
    while (hi - lo > opts.bisect_tol) {
      const long double mid = 0.5L * (lo + hi);
      if (neg_side(s_at(mid)) == lo_neg)
        lo = mid;
      else
        hi = mid;
    }
    const long double root = 0.5L * (lo + hi);
    if (!roots.empty() && root - roots.back().t < opts.scan_step) continue;
    const InversionParts p = parts_at_time(v, root);
    const bool removable =
        std::abs(p.num_x) <= opts.removable_tol * num_scale &&
        std::abs(p.num_y) <= opts.removable_tol * num_scale;
    roots.push_back({static_cast<double>(root), removable});
  }
  return roots;
}

std::optional<double> blowup_time(const ClosedFormSolution& sol, double t_max,
                                  const BlowupOptions& opts) {
  for (const DenominatorRoot& r : denominator_roots(sol, t_max, opts))
    if (!r.removable) return r.t;
  return std::nullopt;
}

void write_trajectory_csv(std::ostream& os, const std::vector<TrajectorySample>& samples) {
  os << "t,x,y,im_residual,near_pole\n";
  char buf[160];
  for (const TrajectorySample& s : samples) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%d\n", s.t, s.x, s.y,
                  s.im_residual, s.near_pole ? 1 : 0);
    os << buf;
  }
}

std::vector<double> linspace(double t0, double t1, std::size_t n) {
  std::vector<double> ts;
  if (n == 0) return ts;
  if (n == 1) {
    ts.push_back(t0);
    return ts;
  }
  ts.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    ts.push_back(t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(n - 1));
  return ts;
}

} // namespace koopman
