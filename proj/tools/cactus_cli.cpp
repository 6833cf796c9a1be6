#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cactus/cli.hpp"

namespace {

using namespace cactus::cli;

void add_common(CLI::App *cmd, RunConfig &cfg) {
  cmd->add_option("--format", cfg.format, "text or json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{{"text", OutputFormat::text},
                                                                              {"json", OutputFormat::json}}));
  cmd->add_option("--output", cfg.output, "write the report to this file instead of stdout");
}

void add_alpha(CLI::App *cmd, RunConfig &cfg, bool required) {
  auto *opt = cmd->add_option("--alpha", cfg.alphas, "alpha in [0,1]; repeatable")->allow_extra_args(false);
  if (required)
    opt->required();
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"A_alpha spectral tools for cactus graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto *spectrum = app.add_subcommand("spectrum", "eigenvalues, spectral radius and Perron vector of a graph");
  spectrum->add_option("graph", cfg.input_path, "edge-list or JSON graph file")->required();
  add_alpha(spectrum, cfg, true);
  add_common(spectrum, cfg);

  auto *extremal = app.add_subcommand("extremal", "closed-form spectrum of the extremal cactus");
  extremal->add_option("--n", cfg.n)->required();
  extremal->add_option("--k", cfg.k)->required();
  add_alpha(extremal, cfg, true);
  const std::map<std::string, ExtremalMode> modes{
      {"closed-form", ExtremalMode::closed_form}, {"numeric", ExtremalMode::numeric}, {"both", ExtremalMode::both}};
  std::string mode = "both";
  extremal->add_option("--mode", mode, "closed-form, numeric or both")->check(CLI::IsMember(modes));
  add_common(extremal, cfg);

  auto *verify = app.add_subcommand("verify", "exhaustive extremality, rewrite and determinant checks");
  const std::map<std::string, VerifySuite> suites{{"extremal", VerifySuite::extremal},
                                                  {"lemmas", VerifySuite::lemmas},
                                                  {"charpoly", VerifySuite::charpoly},
                                                  {"all", VerifySuite::all}};
  std::string suite = "all";
  verify->add_option("suite", suite, "extremal, lemmas, charpoly or all")->check(CLI::IsMember(suites));
  verify->add_option("--n-max", cfg.n_max);
  verify->add_option("--n", cfg.n);
  verify->add_option("--k", cfg.k);
  verify->add_option("--trials", cfg.trials);
  verify->add_option("--seed", cfg.seed);
  add_alpha(verify, cfg, false);
  add_common(verify, cfg);

  auto *ascent = app.add_subcommand("ascent", "greedy rewrite sequence towards the extremal cactus");
  ascent->add_option("graph", cfg.input_path, "edge-list or JSON graph file")->required();
  add_alpha(ascent, cfg, true);
  add_common(ascent, cfg);

  auto *enumerate = app.add_subcommand("enumerate", "list cactus isomorphism classes");
  enumerate->add_option("--n", cfg.n)->required();
  enumerate->add_option("--k", cfg.k);
  add_common(enumerate, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.mode = modes.at(mode);
  cfg.suite = suites.at(suite);
  if (*spectrum)
    cfg.command = Command::spectrum;
  else if (*extremal)
    cfg.command = Command::extremal;
  else if (*verify)
    cfg.command = Command::verify;
  else if (*ascent)
    cfg.command = Command::ascent;
  else
    cfg.command = Command::enumerate;

  try {
    const Report report = run(cfg);
    const std::string &out = report.render(cfg.format);
    if (cfg.output) {
      std::ofstream file(*cfg.output);
      if (!file)
        throw cactus::Error("cannot write " + *cfg.output);
      file << out;
    } else {
      std::cout << out;
    }
    return report.pass ? 0 : 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
