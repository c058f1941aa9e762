// Command-line driver: cauchy {simulate|invert|evaluate|pipeline} [options]
//
// Exit codes: 0 ok, 1 config error, 2 forward divergence, 3 minimizer
// divergence, 4 data mismatch.

#include "cauchy/experiment.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

enum ExitCode { kOk = 0, kConfig = 1, kForward = 2, kMinimizer = 3, kData = 4 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Carleman-weighted inversion of lateral Cauchy data for a 1-D parabolic equation"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  long long seed = -1;
  std::string lambdas;
  bool known_initial = false;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key = value configuration file");
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--seed", seed, "noise generator seed");
    sub->add_option("--lambda", lambdas, "comma-separated Carleman parameters, e.g. 0,3,4");
    sub->add_flag("--known-initial", known_initial, "hold u(x,-T) = f(x) fixed during inversion");
  };
  auto* simulate = app.add_subcommand("simulate", "solve the forward problem, write field.csv, p.csv, q.csv");
  auto* invert = app.add_subcommand("invert", "corrupt the lateral data and minimize for each lambda");
  auto* evaluate = app.add_subcommand("evaluate", "line errors, slices and plots from recon/field files");
  auto* pipeline = app.add_subcommand("pipeline", "simulate + invert + evaluate + summary.csv");
  for (auto* s : {simulate, invert, evaluate, pipeline}) add_common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    cauchy::ExperimentConfig cfg;
    if (!config_path.empty()) cfg = cauchy::load_config(config_path);
    if (!out_dir.empty()) cfg.out = out_dir;
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
    if (!lambdas.empty()) cfg.lambdas = cauchy::parse_lambda_list(lambdas);
    if (known_initial) cfg.known_initial = true;

    if (simulate->parsed()) cauchy::cmd_simulate(cfg);
    else if (invert->parsed()) cauchy::cmd_invert(cfg);
    else if (evaluate->parsed()) cauchy::cmd_evaluate(cfg);
    else cauchy::cmd_pipeline(cfg);
  } catch (const cauchy::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const cauchy::ForwardDivergence& e) {
    std::cerr << "forward divergence: " << e.what() << '\n';
    return kForward;
  } catch (const cauchy::InversionFailed& e) {
    std::cerr << "minimizer divergence: " << e.what() << '\n';
    return kMinimizer;
  } catch (const cauchy::DataMismatch& e) {
    std::cerr << "data mismatch: " << e.what() << '\n';
    return kData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  }
  return kOk;
}
