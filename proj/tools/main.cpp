#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "rigid/kernels.hpp"

using namespace rigid::cli;

int main(int argc, char** argv) {
  CLI::App app{"Cohomology, splittings and conjugation retractions for finite groups and finite-dimensional algebras"};
  app.require_subcommand(1);

  bool as_json = false, timing = false;
  Common common;
  app.add_flag("--json", as_json, "emit the report as JSON");
  app.add_option("--seed", common.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--jobs", common.jobs, "threads for independent trials")->check(CLI::PositiveNumber);
  app.add_flag("--timing", timing, "include wall time in the report");

  std::string group, module, cochain, base, moved, bimodule, phi, psi, mode = "auto", direction, target = "su2";
  std::vector<int> degrees;
  int samples = 200;
  double tol = 1e-8;
  std::optional<bool> cstar;

  auto* coh = app.add_subcommand("cohomology", "dimensions of Z^n, B^n and H^n(G, E)");
  coh->add_option("--group", group, "group file or builtin name (z2, s3, v4, ...)")->required();
  coh->add_option("--module", module, "module file (default: trivial 1-dimensional)");
  coh->add_option("--degree", degrees, "degrees (repeat or comma-separated)")->delimiter(',')->required();

  auto* split = app.add_subcommand("split", "averaging splitting of a group cocycle");
  split->add_option("--cochain", cochain, "cocycle file")->required();

  auto* retract = app.add_subcommand("retract", "conjugator between nearby cocycles (plain or relative)");
  retract->add_option("--base", base, "base cocycle file")->required();
  retract->add_option("--moved", moved, "nearby cocycle file")->required();

  auto* hoch = app.add_subcommand("hochschild", "Hochschild cohomology dimensions or idempotent splitting");
  hoch->add_option("--bimodule", bimodule, "bimodule file");
  hoch->add_option("--degree", degrees, "degrees (repeat or comma-separated)")->delimiter(',');
  hoch->add_option("--cochain", cochain, "cocycle file to split");

  auto* conj = app.add_subcommand("conjugate-morphisms", "conjugate psi back to a nearby phi");
  conj->add_option("--phi", phi, "morphism file")->required();
  conj->add_option("--psi", psi, "morphism file")->required();
  conj->add_option("--mode", mode, "auto, banach or cstar")->capture_default_str();

  auto* tangent = app.add_subcommand("tangent-check", "is a direction a Hochschild 1-cocycle at phi");
  tangent->add_option("--phi", phi, "morphism file")->required();
  tangent->add_option("--direction", direction, "file with the images of the domain basis")->required();
  tangent->add_option("--cstar", cstar, "require self-adjointness (default: phi's flag)");
  tangent->add_option("--tol", tol, "acceptance tolerance")->capture_default_str();

  std::string demo_name;
  group = "";
  auto* demo = app.add_subcommand("demo", "worked scenarios: dual-numbers, projections, pauli, h1-count");
  demo->add_option("name", demo_name, "scenario")->required();
  demo->add_option("--group", group, "h1-count: cyclic group (default z2)");
  demo->add_option("--target", target, "h1-count: su<n> or u<n>")->capture_default_str();
  demo->add_option("--samples", samples, "h1-count: sampled cocycles")->capture_default_str();

  auto* self = app.add_subcommand("selftest", "short end-to-end battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  rigid::kernels::set_threads(common.jobs);
  const auto start = std::chrono::steady_clock::now();
  try {
    std::optional<Report> r;
    if (*coh) r = cmd_cohomology(group, module, degrees);
    else if (*split) r = cmd_split(cochain);
    else if (*retract) r = cmd_retract(base, moved);
    else if (*hoch) r = cmd_hochschild(bimodule, degrees.empty() ? std::vector<int>{1} : degrees, cochain);
    else if (*conj) r = cmd_conjugate_morphisms(phi, psi, mode);
    else if (*tangent) r = cmd_tangent_check(phi, direction, cstar, tol);
    else if (*demo) r = cmd_demo(demo_name, group.empty() ? "z2" : group, target, samples, common);
    else if (*self) r = cmd_selftest(common);
    std::optional<double> wall;
    if (timing) wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << r->render(as_json, wall);
    return r->ok() ? kOk : kInvariantViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
