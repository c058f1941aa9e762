// End-to-end experiment driver: simulate -> corrupt -> invert -> evaluate.
#pragma once

#include "cauchy/csv.hpp"
#include "cauchy/forward.hpp"
#include "cauchy/metrics.hpp"
#include "cauchy/minimizer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cauchy {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every key is optional; the defaults reproduce the reference experiment.
struct ExperimentConfig {
  int nx = 32;
  int nt = 128;
  double t_half = 0.5;
  std::string problem = "paper";  // "paper" or "zero"
  double a = 0.0;
  std::string nonlinearity = "none";
  std::vector<double> lambdas{0.0, 3.0, 4.0};
  double beta = 0.00063;
  double noise_level = 0.05;
  std::uint64_t seed = 1;
  Method method = Method::FixedStepGD;
  double gamma = 1e-8;
  int iterations = 10000;
  int record_every = 100;
  bool known_initial = false;
  std::optional<double> alpha;
  std::string out = "out";
};

/// Parses `key = value` lines; `#` starts a comment. Unknown keys and bad
/// values throw ConfigError.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
void apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// Serializes cfg in the same grammar parse_config reads.
std::string config_to_text(const ExperimentConfig& cfg);

std::vector<double> parse_lambda_list(const std::string& text);

/// "recon_lambda4.csv" style suffix for a lambda value.
std::string lambda_tag(double lambda);

ProblemSpec make_problem(const ExperimentConfig& cfg);

struct Simulation {
  Grid grid;
  ProblemSpec spec;
  FieldD truth;
  CauchyData data;
};

Simulation simulate(const ExperimentConfig& cfg);

struct Inversion {
  double lambda = 0.0;
  FieldD start;
  MinimizeReport report;
};

/// Minimizes for one lambda starting from the noisy rows.
Inversion invert_one(const ExperimentConfig& cfg, const Grid& grid, const ProblemSpec& spec,
                     const NoisyRows& rows, double lambda);

/// Commands writing into cfg.out. Each also writes `manifest.cfg`.
void cmd_simulate(const ExperimentConfig& cfg);
void cmd_invert(const ExperimentConfig& cfg);
void cmd_evaluate(const ExperimentConfig& cfg);
void cmd_pipeline(const ExperimentConfig& cfg);

/// Minimizer divergence for a specific lambda.
class InversionFailed : public std::runtime_error {
 public:
  InversionFailed(double lambda, const std::string& what)
      : std::runtime_error(what), lambda_(lambda) {}
  double lambda() const { return lambda_; }

 private:
  double lambda_;
};

/// Self-contained SVG line plot of E(x), one polyline per profile.
std::string line_error_svg(const std::vector<std::pair<double, LineErrorProfile>>& profiles);

}  // namespace cauchy
