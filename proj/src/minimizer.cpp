#include "cauchy/minimizer.hpp"

#include <algorithm>
#include <cmath>

namespace cauchy {

Method method_from_name(const std::string& name) {
  if (name == "gd") return Method::FixedStepGD;
  if (name == "cg") return Method::FixedStepCG;
  throw std::invalid_argument("unknown method '" + name + "' (expected gd or cg)");
}

std::string method_name(Method m) { return m == Method::FixedStepGD ? "gd" : "cg"; }

FieldD initial_guess(const FunctionalContext& ctx, const NoisyRows& rows,
                     const std::optional<Eigen::VectorXd>& known_initial) {
  const Grid& g = ctx.grid;
  if (rows.last.size() != g.nt || rows.second_last.size() != g.nt)
    throw std::invalid_argument("noisy rows must have length nt");
  FieldD u(g);
  u.values().row(g.nx - 1) = rows.last.transpose();
  u.values().row(g.nx - 2) = rows.second_last.transpose();
  if (known_initial) {
    if (known_initial->size() != g.nx)
      throw std::invalid_argument("known initial condition must have length nx");
    u.values().col(0) = *known_initial;
  }
  return u;
}

namespace {

void record(MinimizeReport& rep, int iter, double j, const FieldD& grad) {
  rep.iter_history.push_back(iter);
  rep.j_history.push_back(j);
  rep.grad_norm_history.push_back(grad.values().norm());
}

void check_finite(int iter, double j, const FieldD& grad) {
  if (!std::isfinite(j) || !grad.all_finite())
    throw MinimizerDivergence(iter, "minimizer diverged at iteration " + std::to_string(iter) +
                                        " (non-finite functional or gradient; step too large?)");
}

}  // namespace

MinimizeReport minimize(const FunctionalContext& ctx, const FieldD& start,
                        const MinimizerConfig& cfg, const IterateObserver& observer) {
  if (!(cfg.step > 0.0)) throw std::invalid_argument("step must be positive");
  if (cfg.iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (cfg.record_every < 1) throw std::invalid_argument("record_every must be >= 1");
  if (!(start.grid() == ctx.grid)) throw std::invalid_argument("start field is on a different grid");

  MinimizeReport rep;
  FieldD u = start;
  FieldD grad(ctx.grid);
  double j = value_and_gradient(ctx, u, grad);
  check_finite(0, j, grad);
  record(rep, 0, j, grad);

  const int restart = std::max(1, std::min(ctx.free_count(), 1000));
  Eigen::MatrixXd direction = -grad.values();
  double grad_sq = grad.values().squaredNorm();

  for (int it = 1; it <= cfg.iterations; ++it) {
    if (cfg.method == Method::FixedStepGD)
      u.values() -= cfg.step * grad.values();
    else
      u.values() += cfg.step * direction;

    j = value_and_gradient(ctx, u, grad);
    check_finite(it, j, grad);

    if (cfg.method == Method::FixedStepCG) {
      const double new_sq = grad.values().squaredNorm();
      if (it % restart == 0 || grad_sq == 0.0) {
        direction = -grad.values();
      } else {
        direction = -grad.values() + (new_sq / grad_sq) * direction;
      }
      grad_sq = new_sq;
    }

    if (observer) observer(it, u);
    if (it % cfg.record_every == 0 || it == cfg.iterations) record(rep, it, j, grad);
  }
  rep.final = std::move(u);
  return rep;
}

}  // namespace cauchy
