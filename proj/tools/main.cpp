// chaoskit: command-line front end. Exit 0 on success, 2 on invalid input,
// 1 on numeric failure or failed checks.
#include <CLI11.hpp>

#include <iostream>

#include "chaoskit/error.hpp"
#include "commands.hpp"

namespace {

using namespace chaoskit::cli;

void add_target_flags(CLI::App* app, target_flags& t, bool with_gamma = true) {
  app->add_option("--name,--target", t.name, "Named target (see targets-list)");
  app->add_option("--target-file", t.file, "Target JSON file (named or custom density)");
  app->add_option("--nu", t.nu, "Degrees of freedom / tail index");
  app->add_option("--a", t.a, "Shape parameter a");
  app->add_option("--b", t.b, "Shape parameter b");
  app->add_option("--lambda", t.lambda, "Rate parameter lambda");
  app->add_option("--delta", t.delta, "Inverse-gamma parameter delta");
  if (with_gamma) app->add_option("--gamma", t.gamma, "Normal variance, or the constant coefficient gamma");
}

void add_out(CLI::App* app, output_flags& o) { app->add_option("--out", o.out, "Write the report to this file"); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wiener chaos diagnostics for Pearson-type Stein targets"};
  app.require_subcommand(1);

  output_flags out;
  target_flags target;
  coeff_flags coeff;
  diagnose_flags diag;
  simulate_flags sim;
  oracle_flags oracle;

  auto* list = app.add_subcommand("targets-list", "List named targets and their parameters");
  add_out(list, out);

  auto* coeffs = app.add_subcommand("targets-coeffs", "Closed-form (alpha, beta, gamma) of a named target");
  add_target_flags(coeffs, target);
  add_out(coeffs, out);

  auto* cls = app.add_subcommand("classify", "Which limits a chaos sequence can reach for a(x)");
  add_target_flags(cls, target);
  cls->add_option("--alpha", coeff.alpha, "Quadratic coefficient of a(x)");
  cls->add_option("--beta", coeff.beta, "Linear coefficient of a(x)");
  add_out(cls, out);

  auto* dg = app.add_subcommand("diagnose", "Moment, contraction and Stein diagnostics along a kernel family");
  add_target_flags(dg, target);
  dg->add_option("--alpha", coeff.alpha, "Quadratic coefficient of a(x)");
  dg->add_option("--beta", coeff.beta, "Linear coefficient of a(x)");
  dg->add_option("--family", diag.family, "gaussian_clt, gamma_fixed or explicit")->capture_default_str();
  dg->add_option("--m", diag.m, "Member indices, e.g. 1,2,4,8")->delimiter(',');
  dg->add_option("--k", diag.k, "Number of squares for gamma_fixed")->capture_default_str();
  dg->add_option("--kernel", diag.kernels, "Kernel files for the explicit family (repeatable)");
  dg->add_option("--mc", diag.mc, "Monte Carlo samples per member; 0 disables")->capture_default_str();
  dg->add_option("--seed", diag.seed, "Seed for the Monte Carlo columns");
  add_out(dg, out);

  auto* sm = app.add_subcommand("simulate", "Euler-Maruyama chain for the target diffusion");
  add_target_flags(sm, target);
  sm->add_option("--dt", sim.dt, "Time step")->capture_default_str();
  sm->add_option("--burn-in", sim.burn_in, "Steps discarded before sampling")->capture_default_str();
  sm->add_option("--samples", sim.samples, "Samples kept")->capture_default_str();
  sm->add_option("--thinning", sim.thinning, "Steps between kept samples")->capture_default_str();
  sm->add_option("--start", sim.start, "Starting point in the target's own coordinates");
  sm->add_option("--seed", sim.seed, "Random seed (required)");
  sm->add_option("--samples-out", sim.samples_out, "Dump the chain, one value per line");
  add_out(sm, out);

  auto* sc = app.add_subcommand("stein-check", "Quadrature cross-checks of the Stein machinery for one target");
  add_target_flags(sc, target);
  add_out(sc, out);

  auto* oc = app.add_subcommand("oracle-check", "Chaos arithmetic against the Wick pairing oracle");
  oc->add_option("--kernels", oracle.kernels, "Random kernels to test")->capture_default_str();
  oc->add_option("--seed", oracle.seed, "Random seed (required)");
  add_out(oc, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*list) return targets_list(out);
    if (*coeffs) return targets_coeffs(target, out);
    if (*cls) return classify(target, coeff, out);
    if (*dg) return diagnose(target, coeff, diag, out);
    if (*sm) return simulate(target, sim, out);
    if (*sc) return stein_check(target, out);
    if (*oc) return oracle_check(oracle, out);
  } catch (const chaoskit::validation_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const chaoskit::numeric_error& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
