#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sgshell/closed_form.hpp"
#include "sgshell/errors.hpp"
#include "sgshell_cli/run.hpp"

using namespace sgshell;

int main(int argc, char** argv) {
  CLI::App app{"Strain-gradient shell energies, resultants and convergence studies"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir;
  bool strict = false;
  int quad = 0;
  std::uint64_t seed = 0;
  app.add_option("--config", config_path, "INI configuration file")->required();
  app.add_option("--out", out_dir, "Output directory (overrides output.dir)");
  app.add_flag("--strict", strict, "Treat regime warnings as errors");
  app.add_option("--quad", quad, "Gauss points per direction (overrides numerics.quad)")->check(CLI::Range(1, 64));
  app.add_option("--seed", seed, "Seed for randomized parameter draws (overrides numerics.seed)");

  std::string example_name;
  std::string study_name;
  auto* energy = app.add_subcommand("energy", "Integrate the shell energy of a deformed chart");
  auto* resultants = app.add_subcommand("resultants", "Dump stress resultants, edge loads and corner forces");
  auto* example = app.add_subcommand("example", "Compare a closed-form cylinder example with the pipeline");
  example->add_option("kind", example_name, "roll, extend or twist");
  auto* solve = app.add_subcommand("solve-zeta", "Solve g.e_r = 0 for the radial stretch zeta");
  auto* converge = app.add_subcommand("converge", "Run a thickness-convergence study");
  converge->add_option("study", study_name, "stored, kinetic or koiter3term");

  CLI11_PARSE(app, argc, argv);

  cli::TaskKind task = cli::TaskKind::Energy;
  if (resultants->parsed()) task = cli::TaskKind::Resultants;
  if (example->parsed()) task = cli::TaskKind::Example;
  if (solve->parsed()) task = cli::TaskKind::SolveZeta;
  if (converge->parsed()) task = cli::TaskKind::Converge;
  (void)energy;

  try {
    cli::RunConfig config = cli::load_config(config_path, task);
    if (!example_name.empty()) config.task.example = parse_example_kind(example_name);
    if (!study_name.empty()) config.task.converge = cli::parse_converge_kind(study_name);

    cli::RunOptions options;
    options.strict = strict;
    if (!out_dir.empty()) options.out_dir = out_dir;
    if (quad > 0) options.quad = quad;
    if (app.count("--seed") > 0) options.seed = seed;

    const cli::RunResult result = cli::run(config, options);
    std::cout << result.text;
    for (const auto& w : result.report["warnings"]) std::cerr << "warning: " << w.get<std::string>() << '\n';
    for (const auto& f : result.files) std::cout << "wrote " << f << '\n';
    return cli::kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code_for(e);
  }
}
