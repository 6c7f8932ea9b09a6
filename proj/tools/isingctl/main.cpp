#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"
#include "ising/error.hpp"

int main(int argc, char** argv) {
  using namespace isingctl;

  CLI::App app{"Glauber dynamics and SAW-tree sampling experiments for the Ising model"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  Context ctx;
  app.add_option("-c,--config", config_path, "INI config file")->check(CLI::ExistingFile);
  app.add_option("-o,--out", ctx.out_path, "output file (default stdout)");
  app.add_flag("-v,--verbose", ctx.verbosity, "progress on stderr");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite,
                     "weitz-identity, tree-bounds, spectral, coupling, sampler-tv or structure");
  auto* coupling = app.add_subcommand("coupling-scan", "monotone coupling times over a sweep");
  auto* decay = app.add_subcommand("decay-scan", "SAW-tree boundary influence against sphere bounds");
  auto* sample = app.add_subcommand("sample", "sequential SAW-tree sampler");
  auto* graph_gen = app.add_subcommand("graph-gen", "write a generated graph file");
  auto* gw = app.add_subcommand("gw-stats", "Galton-Watson generation statistics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_config;
  }

  try {
    if (!config_path.empty()) ctx.config = Config::load(config_path);
    if (verify->parsed()) return cmd_verify(ctx, suite);
    if (coupling->parsed()) return cmd_coupling_scan(ctx);
    if (decay->parsed()) return cmd_decay_scan(ctx);
    if (sample->parsed()) return cmd_sample(ctx);
    if (graph_gen->parsed()) return cmd_graph_gen(ctx);
    if (gw->parsed()) return cmd_gw_stats(ctx);
  } catch (const ConfigError& e) {
    std::cerr << "isingctl: " << e.what() << "\n";
    return exit_config;
  } catch (const ising::InvariantFailure& e) {
    std::cerr << "isingctl: invariant failure: " << e.what() << "\n";
    return exit_violation;
  } catch (const ising::Error& e) {
    std::cerr << "isingctl: " << e.what() << "\n";
    return exit_config;
  }
  return exit_config;
}
