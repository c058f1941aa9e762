#include "cauchy/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace cauchy {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos == v.size() && std::isfinite(d)) return d;
  } catch (const std::exception&) {
  }
  throw ConfigError("config key '" + key + "': expected a number, got '" + v + "'");
}

long long to_integer(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long long n = std::stoll(v, &pos);
    if (pos == v.size()) return n;
  } catch (const std::exception&) {
  }
  throw ConfigError("config key '" + key + "': expected an integer, got '" + v + "'");
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config key '" + key + "': expected true/false, got '" + v + "'");
}

std::string path_in(const ExperimentConfig& cfg, const std::string& name) {
  return (fs::path(cfg.out) / name).string();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
}

void prepare_out(const ExperimentConfig& cfg) {
  fs::create_directories(cfg.out);
  write_text(path_in(cfg, "manifest.cfg"), config_to_text(cfg));
}

Table series(const Grid& g, const std::string& name, const Eigen::VectorXd& v) {
  Table t;
  t.header = {"t", name};
  t.columns.resize(2);
  for (int j = 0; j < g.nt; ++j) {
    t.columns[0].push_back(g.t(j));
    t.columns[1].push_back(v[j]);
  }
  return t;
}

Eigen::VectorXd read_series(const std::string& path, const Grid& g, const std::string& name) {
  const Table t = read_table_csv(path);
  const auto& ts = t.column("t");
  const auto& vs = t.column(name);
  if (static_cast<int>(ts.size()) != g.nt)
    throw DataMismatch("'" + path + "' has " + std::to_string(ts.size()) + " rows, grid has " +
                       std::to_string(g.nt) + " time nodes");
  Eigen::VectorXd v(g.nt);
  for (int j = 0; j < g.nt; ++j) {
    if (std::abs(ts[static_cast<std::size_t>(j)] - g.t(j)) > 1e-12)
      throw DataMismatch("'" + path + "': time nodes do not match the configured grid");
    v[j] = vs[static_cast<std::size_t>(j)];
  }
  return v;
}

Grid config_grid(const ExperimentConfig& cfg) {
  try {
    return make_grid(cfg.nx, cfg.nt, cfg.t_half);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

void apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (key == "nx") cfg.nx = static_cast<int>(to_integer(key, v));
  else if (key == "nt") cfg.nt = static_cast<int>(to_integer(key, v));
  else if (key == "t_half") cfg.t_half = to_double(key, v);
  else if (key == "problem") {
    if (v != "paper" && v != "zero") throw ConfigError("config key 'problem': expected paper or zero");
    cfg.problem = v;
  } else if (key == "a") cfg.a = to_double(key, v);
  else if (key == "nonlinearity") {
    try {
      Nonlinearity::from_name(v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    cfg.nonlinearity = v;
  } else if (key == "lambda") cfg.lambdas = parse_lambda_list(v);
  else if (key == "beta") cfg.beta = to_double(key, v);
  else if (key == "noise_level") cfg.noise_level = to_double(key, v);
  else if (key == "seed") {
    const long long s = to_integer(key, v);
    if (s < 0) throw ConfigError("config key 'seed' must be nonnegative");
    cfg.seed = static_cast<std::uint64_t>(s);
  } else if (key == "method") {
    try {
      cfg.method = method_from_name(v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "gamma") cfg.gamma = to_double(key, v);
  else if (key == "iterations") cfg.iterations = static_cast<int>(to_integer(key, v));
  else if (key == "record_every") cfg.record_every = static_cast<int>(to_integer(key, v));
  else if (key == "known_initial") cfg.known_initial = to_bool(key, v);
  else if (key == "alpha") {
    if (v.empty() || v == "none") cfg.alpha.reset();
    else cfg.alpha = to_double(key, v);
  } else if (key == "out") cfg.out = v;
  else throw ConfigError("unknown config key '" + key + "'");
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    apply_config_entry(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string config_to_text(const ExperimentConfig& cfg) {
  std::ostringstream o;
  o << "nx = " << cfg.nx << '\n'
    << "nt = " << cfg.nt << '\n'
    << "t_half = " << format_number(cfg.t_half) << '\n'
    << "problem = " << cfg.problem << '\n'
    << "a = " << format_number(cfg.a) << '\n'
    << "nonlinearity = " << cfg.nonlinearity << '\n'
    << "lambda = ";
  for (std::size_t k = 0; k < cfg.lambdas.size(); ++k)
    o << (k ? "," : "") << format_number(cfg.lambdas[k]);
  o << '\n'
    << "beta = " << format_number(cfg.beta) << '\n'
    << "noise_level = " << format_number(cfg.noise_level) << '\n'
    << "seed = " << cfg.seed << '\n'
    << "method = " << method_name(cfg.method) << '\n'
    << "gamma = " << format_number(cfg.gamma) << '\n'
    << "iterations = " << cfg.iterations << '\n'
    << "record_every = " << cfg.record_every << '\n'
    << "known_initial = " << (cfg.known_initial ? "true" : "false") << '\n'
    << "alpha = " << (cfg.alpha ? format_number(*cfg.alpha) : std::string("none")) << '\n'
    << "out = " << cfg.out << '\n';
  return o.str();
}

std::vector<double> parse_lambda_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const double v = to_double("lambda", trim(item));
    if (v < 0.0) throw ConfigError("lambda values must be >= 0");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("lambda list is empty");
  return out;
}

std::string lambda_tag(double lambda) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", lambda);
  return buf;
}

ProblemSpec make_problem(const ExperimentConfig& cfg) {
  try {
    auto kind = Nonlinearity::from_name(cfg.nonlinearity);
    return cfg.problem == "zero" ? zero_problem(cfg.a, std::move(kind))
                                 : paper_problem(cfg.a, std::move(kind));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

Simulation simulate(const ExperimentConfig& cfg) {
  Simulation s;
  s.grid = config_grid(cfg);
  s.spec = make_problem(cfg);
  s.truth = solve_forward(s.spec, s.grid);
  s.data = extract_flux(s.truth);
  return s;
}

Inversion invert_one(const ExperimentConfig& cfg, const Grid& grid, const ProblemSpec& spec,
                     const NoisyRows& rows, double lambda) {
  FunctionalContext ctx = make_context(grid, spec, lambda, cfg.beta, cfg.known_initial);
  std::optional<Eigen::VectorXd> f0;
  if (cfg.known_initial) {
    Eigen::VectorXd f(grid.nx);
    for (int i = 0; i < grid.nx; ++i) f[i] = spec.initial(grid.x(i));
    f0 = f;
  }
  Inversion inv;
  inv.lambda = lambda;
  inv.start = initial_guess(ctx, rows, f0);
  MinimizerConfig mc;
  mc.method = cfg.method;
  mc.step = cfg.gamma;
  mc.iterations = cfg.iterations;
  mc.record_every = cfg.record_every;
  try {
    inv.report = minimize(ctx, inv.start, mc);
  } catch (const MinimizerDivergence& e) {
    throw InversionFailed(lambda, "lambda=" + lambda_tag(lambda) + ": " + e.what());
  }
  return inv;
}

void cmd_simulate(const ExperimentConfig& cfg) {
  const Simulation s = simulate(cfg);
  prepare_out(cfg);
  write_field_csv(path_in(cfg, "field.csv"), s.truth);
  write_table_csv(path_in(cfg, "p.csv"), series(s.grid, "p", s.data.p_row));
  write_table_csv(path_in(cfg, "q.csv"), series(s.grid, "q", s.data.q_row));
}

void cmd_invert(const ExperimentConfig& cfg) {
  const Grid grid = config_grid(cfg);
  const ProblemSpec spec = make_problem(cfg);
  CauchyData data;
  if (fs::exists(path_in(cfg, "p.csv")) && fs::exists(path_in(cfg, "q.csv"))) {
    data.p_row = read_series(path_in(cfg, "p.csv"), grid, "p");
    data.q_row = read_series(path_in(cfg, "q.csv"), grid, "q");
  } else {
    data = simulate(cfg).data;
  }
  prepare_out(cfg);

  const NoisyRows rows = apply_noise(data, NoiseSpec{cfg.noise_level, cfg.seed}, grid.h);
  Table noisy;
  noisy.header = {"t", "u_last", "u_second_last"};
  noisy.columns.resize(3);
  for (int j = 0; j < grid.nt; ++j) {
    noisy.columns[0].push_back(grid.t(j));
    noisy.columns[1].push_back(rows.last[j]);
    noisy.columns[2].push_back(rows.second_last[j]);
  }
  write_table_csv(path_in(cfg, "noisy_rows.csv"), noisy);

  for (const double lambda : cfg.lambdas) {
    const Inversion inv = invert_one(cfg, grid, spec, rows, lambda);
    const std::string tag = lambda_tag(lambda);
    write_field_csv(path_in(cfg, "recon_lambda" + tag + ".csv"), inv.report.final);
    Table hist;
    hist.header = {"iter", "J", "grad_norm"};
    hist.columns.resize(3);
    for (std::size_t k = 0; k < inv.report.j_history.size(); ++k) {
      hist.columns[0].push_back(inv.report.iter_history[k]);
      hist.columns[1].push_back(inv.report.j_history[k]);
      hist.columns[2].push_back(inv.report.grad_norm_history[k]);
    }
    write_table_csv(path_in(cfg, "history_lambda" + tag + ".csv"), hist);
  }
}

void cmd_evaluate(const ExperimentConfig& cfg) {
  const FieldD truth = read_field_csv(path_in(cfg, "field.csv"));
  fs::create_directories(cfg.out);
  std::vector<std::pair<double, LineErrorProfile>> profiles;
  Table sub;
  sub.header = {"lambda", "alpha", "error"};
  sub.columns.resize(3);

  for (const double lambda : cfg.lambdas) {
    const std::string tag = lambda_tag(lambda);
    const FieldD recon = read_field_csv(path_in(cfg, "recon_lambda" + tag + ".csv"));
    if (!(recon.grid() == truth.grid()))
      throw DataMismatch("recon_lambda" + tag + ".csv and field.csv live on different grids");

    const LineErrorProfile prof = line_error(recon, truth);
    Table le;
    le.header = {"x", "E"};
    le.columns.resize(2);
    for (std::size_t i = 0; i < prof.x.size(); ++i) {
      le.columns[0].push_back(prof.x[i]);
      le.columns[1].push_back(prof.error[i] ? *prof.error[i] : std::nan(""));
    }
    write_table_csv(path_in(cfg, "line_error_lambda" + tag + ".csv"), le);

    for (const double xs : {0.6, 0.8}) {
      const Slice r = slice_at(recon, xs);
      const Slice t = slice_at(truth, xs);
      Table sl;
      sl.header = {"t", "value_recon", "value_truth"};
      sl.columns.resize(3);
      for (int j = 0; j < truth.grid().nt; ++j) {
        sl.columns[0].push_back(truth.grid().t(j));
        sl.columns[1].push_back(r.values[j]);
        sl.columns[2].push_back(t.values[j]);
      }
      char name[80];
      std::snprintf(name, sizeof name, "slice_lambda%s_x%g.csv", tag.c_str(), xs);
      write_table_csv(path_in(cfg, name), sl);
    }

    if (cfg.alpha) {
      LevelDomainMask mask;
      try {
        mask = level_domain_mask(truth.grid(), *cfg.alpha);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      sub.columns[0].push_back(lambda);
      sub.columns[1].push_back(*cfg.alpha);
      sub.columns[2].push_back(subdomain_error(recon, truth, mask));
    }
    profiles.emplace_back(lambda, prof);
  }
  if (cfg.alpha) write_table_csv(path_in(cfg, "subdomain_error.csv"), sub);
  write_text(path_in(cfg, "line_error.svg"), line_error_svg(profiles));
}

void cmd_pipeline(const ExperimentConfig& cfg) {
  cmd_simulate(cfg);
  cmd_invert(cfg);
  cmd_evaluate(cfg);

  const FieldD truth = read_field_csv(path_in(cfg, "field.csv"));
  const Grid& g = truth.grid();
  Table summary;
  summary.header = {"lambda", "E_0.45", "E_0.6", "E_0.8"};
  summary.columns.resize(4);
  for (const double lambda : cfg.lambdas) {
    const Table le = read_table_csv(path_in(cfg, "line_error_lambda" + lambda_tag(lambda) + ".csv"));
    summary.columns[0].push_back(lambda);
    int c = 1;
    for (const double xs : {0.45, 0.6, 0.8})
      summary.columns[static_cast<std::size_t>(c++)].push_back(
          le.column("E")[static_cast<std::size_t>(nearest_node(g, xs))]);
  }
  write_table_csv(path_in(cfg, "summary.csv"), summary);
}

std::string line_error_svg(const std::vector<std::pair<double, LineErrorProfile>>& profiles) {
  constexpr double width = 640, height = 400, margin = 50;
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};
  double e_max = 0.0;
  for (const auto& [lambda, prof] : profiles)
    for (const auto& e : prof.error)
      if (e) e_max = std::max(e_max, *e);
  if (e_max <= 0.0) e_max = 1.0;
  const auto px = [&](double x) { return margin + x * (width - 2 * margin); };
  const auto py = [&](double e) { return height - margin - e / e_max * (height - 2 * margin); };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
    << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n"
    << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
    << height - margin << "\" stroke=\"black\"/>\n"
    << "<text x=\"" << width / 2 << "\" y=\"" << height - 15 << "\">x</text>\n"
    << "<text x=\"10\" y=\"" << margin - 10 << "\">E(x), max " << e_max << "</text>\n";
  std::size_t k = 0;
  for (const auto& [lambda, prof] : profiles) {
    const char* color = colors[k % std::size(colors)];
    o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < prof.x.size(); ++i)
      if (prof.error[i]) o << px(prof.x[i]) << ',' << py(*prof.error[i]) << ' ';
    o << "\"/>\n"
      << "<text x=\"" << width - margin - 80 << "\" y=\"" << margin + 15 * static_cast<double>(k)
      << "\" fill=\"" << color << "\">lambda=" << lambda_tag(lambda) << "</text>\n";
    ++k;
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace cauchy
