#include "koopman/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <vector>

#include "koopman/errors.hpp"
#include "koopman/integrate.hpp"
#include "koopman/json_io.hpp"
#include "koopman/ode.hpp"
#include "koopman/solution.hpp"

namespace koopman::cli {

namespace {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
      return kExitParse;
    case ErrorKind::NotInFamily:
      return kExitNotInFamily;
    case ErrorKind::DegenerateParameter:
    case ErrorKind::Pole:
    case ErrorKind::InversionSingularity:
    case ErrorKind::DependentEigenfunctions:
      return kExitDegenerate;
    case ErrorKind::Verification:
      return kExitVerification;
    default:
      return kExitInternal;
  }
}

int guarded(std::ostream& out, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    out << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::Parse, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

const char* kLNames[4] = {"b3", "a5", "a4-b5", "a3-b4"};
const char* kXNames[9] = {
    "4*a5*b3-a4*b4",
    "2*a4*b3-2*a3*b4+b4^2-4*b3*b5",
    "2*a2*b3-a1*b4+b2*b4-2*b1*b5",
    "2*a5*b1-a2*b4",
    "a4*b1-a1*b4+b2*b4-2*b1*b5",
    "2*a3*b1-2*a1*b3+2*b2*b3-b1*b4",
    "a4^2-4*a3*a5+2*a5*b4-2*a4*b5",
    "a2*a4-2*a1*a5+2*a5*b2-2*a2*b5",
    "2*a2*a3-a1*a4+a4*b2-a2*b4",
};

// Loads an ODE file and, when it carries constants, shifts it to normal
// form; classification and the eigenfunction formulas live there.
QuadraticODE load_normal_form(const std::string& path, std::ostream& out) {
  QuadraticODE ode = ode_from_json_file(path);
  if (ode.normal_form()) return ode;
  const NormalFormResult nf = to_normal_form(ode);
  if (!nf.constants_vanished)
    raise(ErrorKind::DegenerateParameter,
          "shift substitution leaves residual constants a0 = " + nf.ode.a0.str() +
              ", b0 = " + nf.ode.b0.str() + "; cannot reach normal form");
  out << "note: input had constants; shifted by (u, v) offsets (" << nf.u_offset.str() << ", "
      << nf.v_offset.str() << ")\n";
  return nf.ode;
}

} // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string manifest_json_text(const RunManifest& m) {
  nlohmann::json j = {{"command", m.command},
                      {"input_digest", m.input_digest},
                      {"seed", m.seed},
                      {"version", m.version}};
  return j.dump();
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("KOOPMAN_RATIONAL_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return static_cast<std::uint64_t>(v);
  }
  return flag_seed;
}

int cmd_classify(const ClassifyArgs& args, std::ostream& out) {
  return guarded(out, [&]() -> int {
    const std::string bytes = read_file(args.ode_file);
    const QuadraticODE ode = [&] {
      QuadraticODE raw = ode_from_json_text(bytes);
      if (raw.normal_form()) return raw;
      const NormalFormResult nf = to_normal_form(raw);
      if (!nf.constants_vanished)
        raise(ErrorKind::DegenerateParameter,
              "shift substitution leaves residual constants; cannot classify");
      out << "note: classified after shifting to normal form\n";
      return nf.ode;
    }();

    const Rational tol = args.tolerance.empty() ? Rational(0) : Rational::parse(args.tolerance);
    const FamilyMembership m = classify(ode, tol);

    out << "input: " << args.ode_file << " (digest " << hex64(fnv1a64(bytes)) << ")\n";
    out << "family L: " << (m.in_L ? "yes" : "no") << "\n";
    out << "family X: " << (m.in_X ? "yes" : "no") << "\n";
    for (int i = 0; i < 4; ++i)
      out << "residual L[" << i << "] " << kLNames[i] << " = " << m.residuals_L[i].str() << "\n";
    for (int i = 0; i < 9; ++i)
      out << "residual X[" << i << "] " << kXNames[i] << " = " << m.residuals_X[i].str() << "\n";
    return m.solvable() ? kExitOk : kExitNotInFamily;
  });
}

int cmd_solve(const SolveArgs& args, std::ostream& out) {
  return guarded(out, [&]() -> int {
    const std::string bytes = read_file(args.ode_file);
    const QuadraticODE ode = load_normal_form(args.ode_file, out);
    const InitialCondition ic{Rational::parse(args.x0), Rational::parse(args.y0)};

    const ClosedFormSolution sol = build_solution(ode, ic);
    out << "family: " << (sol.family() == Family::L ? "L" : "X") << "\n";
    out << "lambda1 = " << sol.pair1().lambda.str() << "\n";
    out << "lambda2 = " << sol.pair2().lambda.str() << "\n";
    out << "phi1(x0, y0) = " << sol.phi1_0().str() << "\n";
    out << "phi2(x0, y0) = " << sol.phi2_0().str() << "\n";

    std::optional<double> tb;
    if (args.t1 > 0) {
      tb = blowup_time(sol, args.t1);
      if (tb) {
        std::ostringstream b;
        b.precision(9);
        b << *tb;
        out << "finite escape time in window: t = " << b.str() << "\n";
      } else {
        out << "no finite escape time in (0, " << args.t1 << "]\n";
      }
    }

    const auto samples = evaluate_trajectory(sol, linspace(args.t0, args.t1, args.samples));
    const std::string csv_path = args.out_prefix + ".csv";
    {
      std::ofstream csv(csv_path, std::ios::binary);
      if (!csv) raise(ErrorKind::Parse, "cannot write " + csv_path);
      write_trajectory_csv(csv, samples);
    }

    RunManifest man{"solve", hex64(fnv1a64(bytes)), 0, kToolVersion};
    nlohmann::json j;
    j["manifest"] = nlohmann::json::parse(manifest_json_text(man));
    j["family"] = sol.family() == Family::L ? "L" : "X";
    j["pairs"] = {eigenpair_to_json(sol.pair1()), eigenpair_to_json(sol.pair2())};
    j["phi1_0"] = quadext_to_json(sol.phi1_0());
    j["phi2_0"] = quadext_to_json(sol.phi2_0());
    j["x0"] = ic.x0.str();
    j["y0"] = ic.y0.str();
    if (tb) j["blowup_time"] = *tb;
    const std::string json_path = args.out_prefix + ".eigenpairs.json";
    std::ofstream js(json_path, std::ios::binary);
    if (!js) raise(ErrorKind::Parse, "cannot write " + json_path);
    js << j.dump(2) << "\n";

    out << "wrote " << csv_path << " and " << json_path << "\n";
    return kExitOk;
  });
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  return guarded(out, [&]() -> int {
    const QuadraticODE ode = load_normal_form(args.ode_file, out);
    const InitialCondition ic{Rational::parse(args.x0), Rational::parse(args.y0)};

    ExactEigenpair p1, p2;
    if (!args.eigenpair_file.empty()) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(read_file(args.eigenpair_file));
      } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::Parse, std::string("invalid eigenpair JSON: ") + e.what());
      }
      if (!j.contains("pairs") || !j["pairs"].is_array() || j["pairs"].size() != 2)
        raise(ErrorKind::Parse, "eigenpair file needs a 2-element \"pairs\" array");
      p1 = eigenpair_from_json(j["pairs"][0]);
      p2 = eigenpair_from_json(j["pairs"][1]);
      out << "replaying eigenpairs from " << args.eigenpair_file << "\n";
    } else {
      std::tie(p1, p2) = eigenpairs(ode);
    }

    bool all_pass = true;
    auto report = [&](const std::string& name, bool pass, const std::string& detail) {
      out << name << ": " << (pass ? "PASS" : "FAIL") << (detail.empty() ? "" : " (" + detail + ")")
          << "\n";
      all_pass = all_pass && pass;
    };

    int idx = 1;
    for (const ExactEigenpair* p : {&p1, &p2}) {
      const auto h = verify_eigenpair_exact(ode, *p);
      int zeros = 0;
      for (const auto& v : h) zeros += v.is_zero() ? 1 : 0;
      report("exact residual pair" + std::to_string(idx), zeros == 10,
             std::to_string(zeros) + "/10 entries zero");
      const bool omega_zero = omega_expand<QuadExt>(ode, p->ef, p->lambda).is_zero();
      report("omega expansion pair" + std::to_string(idx), omega_zero,
             omega_zero ? "zero polynomial" : "nonzero polynomial");
      ++idx;
    }

    if (!all_pass) {
      out << "exact residuals failed; skipping numeric checks\n";
      return kExitVerification;
    }

    try {
      const ClosedFormSolution sol(p1, p2, ic);
      IntegratorConfig cfg;
      cfg.t0 = 0.0;
      cfg.t1 = args.t1;
      const CrossCheckReport cc = cross_check(sol, ode, cfg);
      {
        std::ostringstream d;
        d.precision(3);
        d << "max err (" << std::scientific << cc.max_abs_err_x << ", " << cc.max_abs_err_y
          << ") vs tolerance " << args.cross_tol << " over [0, " << cc.compare_until << "], "
          << cc.n_steps << " steps";
        report("numeric cross-check",
               std::max(cc.max_abs_err_x, cc.max_abs_err_y) <= args.cross_tol, d.str());
      }

      idx = 1;
      for (const ExactEigenpair* p : {&p1, &p2}) {
        const double r = linearity_check(ode, *p, ic, cfg);
        std::ostringstream d;
        d.precision(3);
        d << "max residual " << std::scientific << r << " vs tolerance " << args.linearity_tol;
        report("linearity pair" + std::to_string(idx), r <= args.linearity_tol, d.str());
        ++idx;
      }
    } catch (const Error& e) {
      report("numeric checks", false, e.what());
    }

    return all_pass ? kExitOk : kExitVerification;
  });
}

int cmd_sample(const SampleArgs& args, std::ostream& out) {
  return guarded(out, [&]() -> int {
    if (args.family != "L" && args.family != "X")
      raise(ErrorKind::Parse, "family must be L or X, got '" + args.family + "'");
    const std::uint64_t seed = effective_seed(args.seed);
    std::mt19937_64 rng(seed);
    std::filesystem::create_directories(args.out_dir);
    for (std::size_t i = 0; i < args.count; ++i) {
      const QuadraticODE ode = args.family == "L" ? sample_L(rng) : sample_X(rng);
      const FamilyMembership m = classify(ode);
      if (!(args.family == "L" ? m.in_L : m.in_X))
        raise(ErrorKind::Internal, "sampled ODE fails its own membership check");
      std::ostringstream name;
      name << args.out_dir << "/" << args.family << "_" << seed << "_" << i << ".json";
      ode_to_json_file(ode, name.str());
      out << name.str() << "\n";
    }
    return kExitOk;
  });
}

namespace {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

using Checks = std::vector<CheckResult>;

Rational rq(long n, long d = 1) { return Rational(n, d); }
QuadExt qe(const Rational& rat, const Rational& rad, long radicand) {
  return QuadExt(rat, rad, Rational(radicand));
}

ExactEigenfunction make_ef(const QuadExt& c0, const QuadExt& c1, const QuadExt& c2,
                           const QuadExt& d0, const QuadExt& d1, const QuadExt& d2) {
  ExactEigenfunction ef;
  ef.c0 = c0; ef.c1 = c1; ef.c2 = c2;
  ef.d0 = d0; ef.d1 = d1; ef.d2 = d2;
  return ef;
}

void check(Checks& cs, const std::string& name, bool pass, const std::string& detail = "") {
  cs.push_back({name, pass, detail});
}

QuadraticODE perturbed(const QuadraticODE& ode, const Rational& eps) {
  QuadraticODE o = ode;
  o.a1 += eps; o.a2 += eps; o.a3 += eps; o.a4 += eps; o.a5 += eps;
  o.b1 += eps; o.b2 += eps; o.b3 += eps; o.b4 += eps; o.b5 += eps;
  return o;
}

// dx/dt = x - 2y + 2x^2 + xy, dy/dt = 3x + y + 2xy + y^2: an L-family
// spiral whose solution escapes in finite time from (0, 1).
Checks run_l_blowup(const Rational& eps) {
  Checks cs;
  QuadraticODE ode = QuadraticODE::from_coeffs({1, -2, 2, 1, 0}, {3, 1, 0, 2, 1});
  if (!eps.is_zero()) ode = perturbed(ode, eps);

  const FamilyMembership m = classify(ode);
  check(cs, "membership", m.in_L && !m.in_X, "expect L only");
  if (!m.in_L) return cs;

  auto [p1, p2] = eigenpairs_L(ode);
  check(cs, "lambda1", p1.lambda == qe(rq(1), rq(-1), -6), "1 - sqrt(-6)");
  check(cs, "lambda2", p2.lambda == qe(rq(0), rq(2), -6), "2*sqrt(-6)");
  const ExactEigenfunction expected1 =
      make_ef(QuadExt(rq(0)), QuadExt(rq(1)), qe(rq(0), rq(-1, 3), -6),
              QuadExt(rq(-7)), QuadExt(rq(1)), QuadExt(rq(-5)));
  check(cs, "phi1 coefficients", projectively_equal(p1.ef, expected1));

  const ClosedFormSolution sol = build_solution(ode, {rq(0), rq(1)});
  check(cs, "phi1 at ic", sol.phi1_0() == qe(rq(0), rq(1, 36), -6), "sqrt(-6)/36");
  check(cs, "phi2 at ic", sol.phi2_0() == QuadExt(rq(-1)), "-1");

  const auto tb = blowup_time(sol, 3.0);
  std::ostringstream d;
  if (tb) d << "t = " << *tb;
  check(cs, "finite escape time", tb && std::fabs(*tb - 2.10895) <= 1e-4, d.str());
  return cs;
}

// dx/dt = -4x - 2y + x^2 - (2/3)y^2, dy/dt = 3x + y + 2xy + (5/3)y^2: an
// X-family system with rational eigenvalues 1 and 2.
Checks run_x_real(const Rational& eps) {
  Checks cs;
  QuadraticODE ode;
  ode.a1 = rq(-4); ode.a2 = rq(-2); ode.a3 = rq(1); ode.a4 = rq(0); ode.a5 = rq(-2, 3);
  ode.b1 = rq(3); ode.b2 = rq(1); ode.b3 = rq(0); ode.b4 = rq(2); ode.b5 = rq(5, 3);
  if (!eps.is_zero()) ode = perturbed(ode, eps);

  const FamilyMembership m = classify(ode);
  check(cs, "membership", m.in_X && !m.in_L, "expect X only");
  if (!m.in_X) return cs;

  auto [p1, p2] = eigenpairs_X(ode);
  check(cs, "lambda1", p1.lambda == QuadExt(rq(1)), "1");
  check(cs, "lambda2", p2.lambda == QuadExt(rq(2)), "2");
  const ExactEigenfunction expected2 =
      make_ef(QuadExt(rq(-2)), QuadExt(rq(1)), QuadExt(rq(2, 3)),
              QuadExt(rq(0)), QuadExt(rq(1)), QuadExt(rq(2, 3)));
  check(cs, "phi2 coefficients", projectively_equal(p2.ef, expected2));

  const ClosedFormSolution sol = build_solution(ode, {rq(-3), rq(-4)});
  check(cs, "phi1 at ic", sol.phi1_0() == QuadExt(rq(8, 7)), "8/7");
  check(cs, "phi2 at ic", sol.phi2_0() == QuadExt(rq(23, 17)), "23/17");

  const auto t0 = evaluate_trajectory(sol, {0.0});
  check(cs, "trajectory at t=0",
        std::fabs(t0[0].x + 3) < 1e-12 && std::fabs(t0[0].y + 4) < 1e-12);
  check(cs, "no finite escape", !blowup_time(sol, 5.0).has_value(), "window (0, 5]");
  return cs;
}

// dx/dt = -3x - 2y + x^2 - (2/3)y^2, dy/dt = 3x + y + 2xy + (4/3)y^2:
// X family with complex conjugate eigenvalues 1 -+ i sqrt(2).
Checks run_x_complex(const Rational& eps) {
  Checks cs;
  QuadraticODE ode;
  ode.a1 = rq(-3); ode.a2 = rq(-2); ode.a3 = rq(1); ode.a4 = rq(0); ode.a5 = rq(-2, 3);
  ode.b1 = rq(3); ode.b2 = rq(1); ode.b3 = rq(0); ode.b4 = rq(2); ode.b5 = rq(4, 3);
  if (!eps.is_zero()) ode = perturbed(ode, eps);

  const FamilyMembership m = classify(ode);
  check(cs, "membership", m.in_X, "expect X");
  if (!m.in_X) return cs;

  auto [p1, p2] = eigenpairs_X(ode);
  check(cs, "lambda1", p1.lambda == qe(rq(1), rq(-1), -2), "1 - sqrt(-2)");
  check(cs, "lambda2", p2.lambda == qe(rq(1), rq(1), -2), "1 + sqrt(-2)");

  const ClosedFormSolution sol = build_solution(ode, {rq(2), rq(-1)});
  check(cs, "phi1 at ic", sol.phi1_0() == qe(rq(0), rq(1, 2), -2), "sqrt(-2)/2");

  double max_im = 0;
  for (const auto& s : evaluate_trajectory(sol, linspace(0, 5, 101)))
    max_im = std::max(max_im, s.im_residual);
  std::ostringstream d;
  d.precision(3);
  d << "max imaginary residual " << std::scientific << max_im;
  check(cs, "real-valued trajectory", max_im <= 1e-9, d.str());
  return cs;
}

// dx/dt = -x + 2y + x^2 + xy - (3/2)y^2, dy/dt = -2x + y - x^2/2 + 3xy - y^2:
// X family with purely imaginary eigenvalues; orbits are closed and bounded.
Checks run_x_center(const Rational& eps) {
  Checks cs;
  QuadraticODE ode;
  ode.a1 = rq(-1); ode.a2 = rq(2); ode.a3 = rq(1); ode.a4 = rq(1); ode.a5 = rq(-3, 2);
  ode.b1 = rq(-2); ode.b2 = rq(1); ode.b3 = rq(-1, 2); ode.b4 = rq(3); ode.b5 = rq(-1);
  if (!eps.is_zero()) ode = perturbed(ode, eps);

  const FamilyMembership m = classify(ode);
  check(cs, "membership", m.in_X, "expect X");
  if (!m.in_X) return cs;

  auto [p1, p2] = eigenpairs_X(ode);
  check(cs, "lambda1", p1.lambda == qe(rq(0), rq(-1), -3), "-sqrt(-3)");
  check(cs, "lambda2", p2.lambda == qe(rq(0), rq(1), -3), "sqrt(-3)");

  const ClosedFormSolution sol = build_solution(ode, {rq(2), rq(-1)});
  check(cs, "phi1 at ic", sol.phi1_0() == qe(rq(64, 49), rq(11, 49), -3),
        "(64 + 11*sqrt(-3))/49");

  double amp = 0;
  for (const auto& s : evaluate_trajectory(sol, linspace(0, 20, 2001)))
    amp = std::max({amp, std::fabs(s.x), std::fabs(s.y)});
  std::ostringstream d;
  d << "max |x|, |y| = " << amp;
  check(cs, "bounded orbit", amp < 10.0, d.str());
  check(cs, "no finite escape", !blowup_time(sol, 20.0).has_value(), "window (0, 20]");
  return cs;
}

// dx/dt = xy, dy/dt = y^2 - x - 1: outside normal form (constant term),
// with a known exact eigenpair family.
Checks run_constants_pair(const Rational& eps) {
  Checks cs;
  QuadraticODE ode;
  ode.a4 = rq(1);
  ode.b0 = rq(-1); ode.b1 = rq(-1); ode.b5 = rq(1);
  if (!eps.is_zero()) ode = perturbed(ode, eps);

  ExactEigenpair p1, p2;
  p1.lambda = QuadExt(rq(1));
  p1.ef = make_ef(QuadExt(rq(0)), QuadExt(rq(1)), QuadExt(rq(0)),
                  QuadExt(rq(1)), QuadExt(rq(1)), QuadExt(rq(1)));
  p2.lambda = QuadExt(rq(-1));
  p2.ef = make_ef(QuadExt(rq(0)), QuadExt(rq(1)), QuadExt(rq(0)),
                  QuadExt(rq(1)), QuadExt(rq(1)), QuadExt(rq(-1)));

  int idx = 1;
  for (const ExactEigenpair* p : {&p1, &p2}) {
    const auto r = verify_eigenpair_numeric(ode, *p);
    double worst = 0;
    for (const auto& v : r) worst = std::max(worst, std::abs(v));
    std::ostringstream d;
    d.precision(3);
    d << "max residual coefficient " << std::scientific << worst;
    check(cs, "pde residual pair" + std::to_string(idx), worst <= 1e-12, d.str());
    ++idx;
  }

  const InitialCondition ic{rq(1, 2), rq(1, 5)};
  IntegratorConfig cfg;
  cfg.t1 = 1.0;
  idx = 1;
  for (const ExactEigenpair* p : {&p1, &p2}) {
    const double r = linearity_check(ode, *p, ic, cfg);
    std::ostringstream d;
    d.precision(3);
    d << "max |phi(x(t)) - phi(x0) e^(lambda t)| = " << std::scientific << r;
    check(cs, "linearity pair" + std::to_string(idx), r <= 1e-8, d.str());
    ++idx;
  }

  const ClosedFormSolution sol(p1, p2, ic);
  const auto t0 = evaluate_trajectory(sol, {0.0});
  check(cs, "direct solution at t=0",
        std::fabs(t0[0].x - 0.5) < 1e-12 && std::fabs(t0[0].y - 0.2) < 1e-12);
  return cs;
}

} // namespace

int cmd_examples(const ExamplesArgs& args, std::ostream& out) {
  return guarded(out, [&]() -> int {
    const Rational eps = args.perturb.empty() ? Rational(0) : Rational::parse(args.perturb);

    struct Entry {
      const char* name;
      Checks (*run)(const Rational&);
    };
    const Entry entries[] = {
        {"L family blow-up", run_l_blowup},
        {"X family rational eigenvalues", run_x_real},
        {"X family complex eigenvalues", run_x_complex},
        {"X family center", run_x_center},
        {"eigenpairs with constant term", run_constants_pair},
    };

    nlohmann::json jout = nlohmann::json::array();
    std::size_t pass_count = 0, total = 0;
    bool all_pass = true;
    for (const Entry& e : entries) {
      Checks cs;
      std::string err;
      try {
        cs = e.run(eps);
      } catch (const Error& ex) {
        err = ex.what();
      }
      bool example_pass = err.empty();
      nlohmann::json jchecks = nlohmann::json::array();
      for (const CheckResult& c : cs) {
        example_pass = example_pass && c.pass;
        jchecks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      }
      jout.push_back({{"example", e.name}, {"pass", example_pass}, {"error", err}, {"checks", jchecks}});
      ++total;
      pass_count += example_pass ? 1 : 0;
      all_pass = all_pass && example_pass;

      if (!args.json) {
        out << "=== " << e.name << (example_pass ? "  [PASS]" : "  [FAIL]") << "\n";
        if (!err.empty()) out << "  error: " << err << "\n";
        for (const CheckResult& c : cs)
          out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name
              << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
      }
    }

    if (args.json)
      out << jout.dump(2) << "\n";
    else
      out << pass_count << "/" << total << " examples pass\n";
    return all_pass ? kExitOk : kExitVerification;
  });
}

} // namespace koopman::cli
