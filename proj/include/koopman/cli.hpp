#ifndef KOOPMAN_CLI_HPP
#define KOOPMAN_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace koopman::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit-code contract, exhaustive:
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitNotInFamily = 3;
inline constexpr int kExitDegenerate = 4;  // degenerate parameters or poles
inline constexpr int kExitVerification = 5;

struct RunManifest {
  std::string command;
  std::string input_digest;  // FNV-1a 64 of the input bytes, hex
  std::uint64_t seed = 0;
  std::string version = kToolVersion;
};

std::uint64_t fnv1a64(const std::string& bytes);
std::string manifest_json_text(const RunManifest& m);

/// --seed unless KOOPMAN_RATIONAL_SEED is set in the environment.
std::uint64_t effective_seed(std::uint64_t flag_seed);

struct ClassifyArgs {
  std::string ode_file;
  std::string tolerance;  // empty = exact; otherwise |residual| < tol
};

struct SolveArgs {
  std::string ode_file;
  std::string x0 = "0";
  std::string y0 = "0";
  double t0 = 0.0;
  double t1 = 3.0;
  std::size_t samples = 301;
  std::string out_prefix = "solution";
};

struct VerifyArgs {
  std::string ode_file;
  std::string x0 = "0";
  std::string y0 = "0";
  double t1 = 3.0;
  std::string eigenpair_file;  // replay mode when nonempty
  double cross_tol = 1e-5;
  // |phi| grows like e^(Re lambda * t), so the absolute residual inherits
  // the gradient blow-up near the eigenfunction pole line; sized for
  // windows of a few time units
  double linearity_tol = 1e-6;
};

struct SampleArgs {
  std::string family = "X";  // "L" or "X"
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::string out_dir = ".";
};

struct ExamplesArgs {
  std::string perturb;  // nonempty: exact rational fuzz added to every coefficient
  bool json = false;
};

int cmd_classify(const ClassifyArgs& args, std::ostream& out);
int cmd_solve(const SolveArgs& args, std::ostream& out);
int cmd_verify(const VerifyArgs& args, std::ostream& out);
int cmd_sample(const SampleArgs& args, std::ostream& out);
int cmd_examples(const ExamplesArgs& args, std::ostream& out);

} // namespace koopman::cli

#endif
