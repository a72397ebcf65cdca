#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace maxcyl::app;

int main(int argc, char** argv) {
  CLI::App app{"Maxwell-to-Schroedinger reduction workbench for periodic cylinders"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  std::string grid;
  int k_count = 0;
  bool svg = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON run configuration")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "Output directory (overrides the config)");
    sub->add_option("--seed", seed, "Seed for random test fields and starting blocks");
    sub->add_option("--grid", grid, "Grid override N1,N2,N3");
    sub->add_option("--k-count", k_count, "Use this many uniform k samples in [0, 2pi)");
  };
  CLI::App* validate = app.add_subcommand("validate", "Check coefficient bounds and periodicity");
  CLI::App* verify = app.add_subcommand("verify", "Run the identity suite and write verify.json");
  CLI::App* reduce = app.add_subcommand("reduce", "Sample V and Sigma and write reduce.json");
  CLI::App* bands = app.add_subcommand("bands", "Compute Bloch bands and write bands.csv");
  CLI::App* flatscan = app.add_subcommand("flatscan", "Scan bands for flat-band candidates");
  CLI::App* empty = app.add_subcommand("empty-compare", "Compare bands with the analytic empty waveguide");
  for (CLI::App* sub : {validate, verify, reduce, bands, flatscan, empty}) add_common(sub);
  bands->add_flag("--svg", svg, "Also write bands.svg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }

  try {
    Overrides ov;
    for (CLI::App* sub : app.get_subcommands()) {
      if (sub->count("--seed")) ov.seed = seed;
      if (sub->count("--grid")) ov.grid = parse_grid(grid);
      if (sub->count("--k-count")) ov.k_count = k_count;
      if (sub->count("--out")) ov.output = out_dir;
    }
    const RunConfig cfg = load_config(config_path, ov);
    std::cerr << "config hash " << cfg.hash_hex() << "\n";
    if (validate->parsed()) return cmd_validate(cfg, std::cout);
    if (verify->parsed()) return cmd_verify(cfg, std::cout);
    if (reduce->parsed()) return cmd_reduce(cfg, std::cout);
    if (bands->parsed()) return cmd_bands(cfg, CommandOptions{svg}, std::cout);
    if (flatscan->parsed()) return cmd_flatscan(cfg, std::cout);
    if (empty->parsed()) return cmd_empty_compare(cfg, std::cout);
  } catch (...) {
    return exit_code_for_current_exception(std::cerr);
  }
  return kConfigError;
}
