// Command-line front end: classify quadratic ODEs, build and verify
// closed-form solutions, and emit seeded sample systems.

#include <CLI11.hpp>

#include <iostream>

#include "koopman/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Closed-form solutions of planar quadratic ODEs via linear rational eigenfunctions"};
  app.set_version_flag("--version", koopman::cli::kToolVersion);
  app.require_subcommand(1);

  using namespace koopman::cli;

  ClassifyArgs cl;
  auto* classify = app.add_subcommand("classify", "Decide membership in the solvable families L and X");
  classify->add_option("ode_file", cl.ode_file, "ODE coefficient JSON file")->required();
  classify->add_option("--tol", cl.tolerance, "treat |residual| < tol as zero (default: exact)");

  SolveArgs so;
  auto* solve = app.add_subcommand("solve", "Build the closed-form solution and write trajectory CSV");
  solve->add_option("ode_file", so.ode_file, "ODE coefficient JSON file")->required();
  solve->add_option("--x0", so.x0, "initial x (integer, decimal, or p/q)");
  solve->add_option("--y0", so.y0, "initial y");
  solve->add_option("--t0", so.t0, "window start");
  solve->add_option("--t1", so.t1, "window end");
  solve->add_option("--samples", so.samples, "number of CSV samples");
  solve->add_option("--out", so.out_prefix, "output prefix (<out>.csv, <out>.eigenpairs.json)");

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "Residual, cross-check, and linearity verification");
  verify->add_option("ode_file", ve.ode_file, "ODE coefficient JSON file")->required();
  verify->add_option("--x0", ve.x0, "initial x");
  verify->add_option("--y0", ve.y0, "initial y");
  verify->add_option("--t1", ve.t1, "cross-check window end");
  verify->add_option("--eigenpairs", ve.eigenpair_file, "replay eigenpairs from a solve output JSON");
  verify->add_option("--cross-tol", ve.cross_tol, "cross-check tolerance");
  verify->add_option("--linearity-tol", ve.linearity_tol, "linearity tolerance");

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "Emit seeded random ODEs from a solvable family");
  sample->add_option("--family", sa.family, "L or X")->required();
  sample->add_option("--seed", sa.seed, "RNG seed (KOOPMAN_RATIONAL_SEED overrides)");
  sample->add_option("--count", sa.count, "number of files");
  sample->add_option("--out-dir", sa.out_dir, "output directory");

  ExamplesArgs ex;
  auto* examples = app.add_subcommand("examples", "Run the bundled reference systems end to end");
  examples->add_option("--perturb", ex.perturb, "fuzz every coefficient by this exact rational");
  examples->add_flag("--json", ex.json, "machine-readable results");

  CLI11_PARSE(app, argc, argv);

  if (classify->parsed()) return cmd_classify(cl, std::cout);
  if (solve->parsed()) return cmd_solve(so, std::cout);
  if (verify->parsed()) return cmd_verify(ve, std::cout);
  if (sample->parsed()) return cmd_sample(sa, std::cout);
  if (examples->parsed()) return cmd_examples(ex, std::cout);
  return koopman::cli::kExitInternal;
}
