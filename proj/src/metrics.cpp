#include "cauchy/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace cauchy {

namespace {

void require_same_grid(const FieldD& a, const FieldD& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("fields live on different grids");
}

}  // namespace

double LineErrorProfile::mean_over(double x_lo, double x_hi) const {
  double sum = 0.0;
  int n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < x_lo || x[i] > x_hi || !error[i]) continue;
    sum += *error[i];
    ++n;
  }
  if (n == 0) throw std::domain_error("no defined line errors in the requested interval");
  return sum / n;
}

LineErrorProfile line_error(const FieldD& recon, const FieldD& truth) {
  require_same_grid(recon, truth);
  const Grid& g = truth.grid();
  LineErrorProfile prof;
  prof.x.resize(static_cast<std::size_t>(g.nx));
  prof.error.resize(static_cast<std::size_t>(g.nx));
  for (int i = 0; i < g.nx; ++i) {
    const auto diff = recon.values().row(i) - truth.values().row(i);
    const double num = std::sqrt(diff.squaredNorm() * g.tau);
    const double den = std::sqrt(truth.values().row(i).squaredNorm() * g.tau);
    prof.x[static_cast<std::size_t>(i)] = g.x(i);
    if (den >= 1e-14) prof.error[static_cast<std::size_t>(i)] = num / den;
  }
  return prof;
}

int nearest_node(const Grid& grid, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("slice position must lie in [0,1]");
  int best = 0;
  double best_dist = std::abs(grid.x(0) - x);
  for (int i = 1; i < grid.nx; ++i) {
    const double d = std::abs(grid.x(i) - x);
    if (d < best_dist) {
      best = i;
      best_dist = d;
    }
  }
  return best;
}

Slice slice_at(const FieldD& field, double x) {
  const Grid& g = field.grid();
  Slice s;
  s.node = nearest_node(g, x);
  s.x = g.x(s.node);
  s.values = field.values().row(s.node).transpose();
  return s;
}

double subdomain_error(const FieldD& recon, const FieldD& truth, const LevelDomainMask& mask) {
  require_same_grid(recon, truth);
  const Grid& g = truth.grid();
  if (mask.mask.rows() != g.nx || mask.mask.cols() != g.nt)
    throw std::invalid_argument("mask lives on a different grid");
  if (mask.count() == 0) throw std::invalid_argument("empty level-domain mask");
  double sum = 0.0;
  for (int j = 0; j < g.nt; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (!mask.mask(i, j)) continue;
      const double d = recon(i, j) - truth(i, j);
      sum += d * d;
      if (i + 1 < g.nx && mask.mask(i + 1, j)) {
        const double dx = (recon(i + 1, j) - truth(i + 1, j) - d) / g.h;
        sum += dx * dx;
      }
    }
  }
  return std::sqrt(sum * g.h * g.tau);
}

}  // namespace cauchy
