#include "cauchy/model.hpp"

namespace cauchy {

Nonlinearity Nonlinearity::from_name(const std::string& name) {
  if (name == "none") return none();
  if (name == "sin2") return sin2();
  if (name == "exp04") return exp04();
  throw std::invalid_argument("unknown nonlinearity '" + name + "' (expected sin2, exp04, none)");
}

std::string Nonlinearity::name() const {
  switch (tag_) {
    case NonlinearityTag::None: return "none";
    case NonlinearityTag::Sin2: return "sin2";
    case NonlinearityTag::Exp04: return "exp04";
    case NonlinearityTag::Custom: return "custom";
  }
  return "custom";
}

std::pair<double, double> eval_nonlinearity(const Nonlinearity& kind, double u) {
  const auto r = kind.eval(u);
  if (!std::isfinite(r.first) || !std::isfinite(r.second))
    throw std::overflow_error("nonlinearity " + kind.name() + " is not finite at u=" +
                              std::to_string(u));
  return r;
}

namespace {

void check_a(double a) {
  if (!(a >= 0.0)) throw std::invalid_argument("nonlinearity strength a must be >= 0");
}

}  // namespace

ProblemSpec paper_problem(double a, Nonlinearity s_kind) {
  check_a(a);
  ProblemSpec p;
  p.a = a;
  p.s_kind = std::move(s_kind);
  p.source = [](double x, double t) {
    return 10.0 * std::sin(100.0 * ((x - 0.5) * (x - 0.5) + t * t));
  };
  p.initial = [](double x) { return 10.0 * (x - x * x); };
  p.left_bc = [](double t) { return 10.0 * std::sin(10.0 * (t - 0.5) * (t + 0.5)); };
  p.right_bc = [](double t) { return std::sin(10.0 * (t + 0.5)); };
  return p;
}

ProblemSpec zero_problem(double a, Nonlinearity s_kind) {
  check_a(a);
  ProblemSpec p;
  p.a = a;
  p.s_kind = std::move(s_kind);
  p.source = [](double, double) { return 0.0; };
  p.initial = [](double) { return 0.0; };
  p.left_bc = [](double) { return 0.0; };
  p.right_bc = [](double) { return 0.0; };
  return p;
}

}  // namespace cauchy
