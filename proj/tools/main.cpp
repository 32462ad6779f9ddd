// Command-line driver: builds the solution families and grids from a run
// configuration and prints a JSON report of named checks.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "malab/config.hpp"
#include "malab/errors.hpp"
#include "malab/runner.hpp"

namespace {

void apply_seed_preset(malab::RunConfig& cfg, const std::string& name) {
  using malab::SeedSpec;
  if (name == "default") {
    const malab::RunConfig fresh = malab::default_config();
    cfg.seeds = fresh.seeds;
  } else if (name == "poly") {
    cfg.seeds.h = SeedSpec::parse("poly 0 0 0.125");
    cfg.seeds.f = SeedSpec::parse("poly 0.4 0.2");
    cfg.seeds.b = SeedSpec::parse("poly 0 0 0.1");
    cfg.seeds.cylinder_f = SeedSpec::parse("linear");
  } else if (name == "exp") {
    cfg.seeds.h = SeedSpec::parse("exp 0.3");
    cfg.seeds.f = SeedSpec::parse("exp -1");
    cfg.seeds.b = SeedSpec::parse("zero");
    cfg.seeds.cylinder_f = SeedSpec::parse("linear");
  } else if (name == "wide-disc") {
    const malab::RunConfig fresh = malab::default_config();
    cfg.seeds = fresh.seeds;
    cfg.numeric.radius = 2.0;
  } else {
    throw malab::ConfigError("unknown seed preset: '" + name + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification lab for fibered solutions of the unit "
               "determinant equation"};
  std::string command, config_path, out_path, preset;
  int order = 0;
  double tol = 0.0, grid_h = 0.0;

  app.add_option("COMMAND", command,
                 "one of: verify-flat, verify-cylinder, curvature, radial, "
                 "donaldson, picard, appendix, all");
  app.add_option("--command", command, "same as the positional COMMAND");
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--out", out_path, "write the JSON report (and CSV tables)");
  app.add_option("--seed-preset", preset,
                 "seed bundle: default, poly, exp, wide-disc");
  app.add_option("--order", order, "series truncation order");
  app.add_option("--tol", tol, "defect tolerance");
  app.add_option("--grid-h", grid_h, "lattice spacing");

  CLI11_PARSE(app, argc, argv);

  try {
    malab::RunConfig cfg = config_path.empty()
                               ? malab::default_config()
                               : malab::parse_config_file(config_path);
    if (!command.empty()) malab::apply_key(cfg, "command", command);
    if (!out_path.empty()) malab::apply_key(cfg, "out", out_path);
    if (!preset.empty()) apply_seed_preset(cfg, preset);
    if (order > 0) {
      malab::apply_key(cfg, "numeric.order", std::to_string(order));
    }
    if (tol > 0.0) cfg.numeric.tol = tol;
    if (grid_h > 0.0) {
      if (!(grid_h < 0.5)) {
        throw malab::ConfigError("numeric.grid_h must be in (0, 1/2)");
      }
      cfg.numeric.grid_h = grid_h;
    }
    return malab::run_cli(cfg, std::cout);
  } catch (const malab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const malab::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const malab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
