#include <iostream>

#include <CLI11.hpp>

#include <discrete_remez/error.hpp>

#include "commands.hpp"

namespace {

int exit_status(discrete_remez::ErrorCode code) {
  using discrete_remez::ErrorCode;
  switch (code) {
    case ErrorCode::kNotApplicable:
    case ErrorCode::kIndefiniteSet:
    case ErrorCode::kInsufficientPoints:
      return cli::kExitNotApplicable;
    case ErrorCode::kFalsificationFound:
      return cli::kExitVerification;
    default:
      return cli::kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Remez-type bounds on finite point sets: covering numbers, metric spans, "
               "Chebyshev factors, exact spans by linear programming, and spread criteria."};
  app.set_version_flag("--version", DISCRETE_REMEZ_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  cli::GlobalOptions g;
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--threads", g.threads, "Worker threads, 0 for all cores");
  auto* json_flag = app.add_flag("--json", "JSON output (default)");
  app.add_flag("--csv", g.csv, "CSV output where the result is tabular")->excludes(json_flag);
  app.add_option("--constants-table", g.constants_table,
                 "JSON file of C'_i(n) rows for dimensions n >= 3")->check(CLI::ExistingFile);

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", g.out, "Write output here instead of stdout"); };

  cli::GenArgs gen;
  auto* s_gen = app.add_subcommand("gen", "Generate a point set");
  s_gen->add_option("kind", gen.kind, "grid1d, grid, power or geometric")->required();
  s_gen->add_option("--s", gen.s, "Grid nodes per axis");
  s_gen->add_option("--n", gen.n, "Grid dimension");
  s_gen->add_option("--r", gen.r, "Exponent of the power set 1/k^r");
  s_gen->add_option("--q", gen.q, "Ratio of the geometric set q^m");
  s_gen->add_option("--k", gen.k, "Number of points of the power or geometric set");
  add_out(s_gen);

  cli::CoveringArgs cov;
  auto* s_cov = app.add_subcommand("covering", "Covering numbers by cubes of side eps");
  s_cov->add_option("input", cov.input, "Point-set file (.json or .csv)")->required()->check(CLI::ExistingFile);
  s_cov->add_option("--eps", cov.eps, "Scales at which to report the covering number");
  add_out(s_cov);

  cli::OmegaArgs om;
  auto* s_om = app.add_subcommand("omega", "Metric span of a point set");
  s_om->add_option("input", om.input, "Point-set file")->required()->check(CLI::ExistingFile);
  s_om->add_option("--d", om.d, "Polynomial degree")->required()->check(CLI::PositiveNumber);
  s_om->add_option("--curve", om.curve, "Also write the span curve as CSV to this file");
  add_out(s_om);

  cli::BoundArgs bd;
  auto* s_bd = app.add_subcommand("bound", "Chebyshev bound on the Remez span from the metric span");
  s_bd->add_option("input", bd.input, "Point-set file")->required()->check(CLI::ExistingFile);
  s_bd->add_option("--d", bd.d, "Polynomial degree")->required()->check(CLI::PositiveNumber);
  s_bd->add_flag("--unit-volume", bd.unit_volume, "Use the span itself as the measure ratio");
  add_out(s_bd);

  cli::ExactArgs ex;
  auto* s_ex = app.add_subcommand("exact", "Remez span by linear programming over a probe grid");
  s_ex->add_option("input", ex.input, "Point-set file")->required()->check(CLI::ExistingFile);
  s_ex->add_option("--d", ex.d, "Polynomial degree")->required()->check(CLI::NonNegativeNumber);
  s_ex->add_option("--resolution", ex.resolution, "Probe nodes per axis, 0 for the default");
  s_ex->add_option("--falsify", ex.falsify, "Random polynomials to test against the span bound");
  add_out(s_ex);

  cli::FavardArgs fv;
  auto* s_fv = app.add_subcommand("favard", "Interpolation bound over (d+1)-point subsets");
  s_fv->add_option("input", fv.input, "One-dimensional point-set file")->required()->check(CLI::ExistingFile);
  s_fv->add_option("--d", fv.d, "Polynomial degree")->required()->check(CLI::NonNegativeNumber);
  s_fv->add_flag("--heuristic", fv.heuristic, "Windows and farthest-point subsets only");
  add_out(s_fv);

  cli::SpreadArgs sp;
  auto* s_sp = app.add_subcommand("spread", "Spanning-tree weights, dispersion and the spread criterion");
  s_sp->add_option("input", sp.input, "Point-set file")->required()->check(CLI::ExistingFile);
  s_sp->add_option("--beta", sp.beta, "Edge-length exponent")->required();
  s_sp->add_option("--p-max", sp.p_max, "Largest p in the dispersion table, 0 for |Z|");
  s_sp->add_flag("--euclidean", sp.euclidean, "Euclidean instead of l-infinity distances");
  s_sp->add_flag("--heuristic", sp.heuristic, "Skip subset enumeration");
  s_sp->add_option("--d", sp.d, "Degree for the positivity criterion (dimension >= 2)");
  s_sp->add_option("--cprime", sp.cprime, "Override C'(n, d) of the criterion");
  add_out(s_sp);

  cli::VerifyArgs vf;
  auto* s_vf = app.add_subcommand("verify", "Check the span bound against the exact span and a falsifier");
  s_vf->add_option("input", vf.input, "Point-set file")->required()->check(CLI::ExistingFile);
  s_vf->add_option("--d", vf.d, "Polynomial degree")->required()->check(CLI::PositiveNumber);
  s_vf->add_option("--resolution", vf.resolution, "Probe nodes per axis, 0 for the default");
  s_vf->add_option("--trials", vf.trials, "Random polynomials for the falsifier");
  add_out(s_vf);

  cli::ReproduceArgs rp;
  auto* s_rp = app.add_subcommand("reproduce", "Write comparison tables for the worked examples");
  s_rp->add_option("--section", rp.section,
                   "grid-span, power-span, geometric-span, grid-bound, sparse-bound, grid-product or all")->required();
  s_rp->add_option("--out", rp.out_dir, "Directory for the CSV tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitUsage;
  }

  try {
    if (*s_gen) return cli::cmd_gen(gen, g);
    if (*s_cov) return cli::cmd_covering(cov, g);
    if (*s_om) return cli::cmd_omega(om, g);
    if (*s_bd) return cli::cmd_bound(bd, g);
    if (*s_ex) return cli::cmd_exact(ex, g);
    if (*s_fv) return cli::cmd_favard(fv, g);
    if (*s_sp) return cli::cmd_spread(sp, g);
    if (*s_vf) return cli::cmd_verify(vf, g);
    if (*s_rp) return cli::cmd_reproduce(rp, g);
  } catch (const discrete_remez::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_status(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return cli::kExitUsage;
}
