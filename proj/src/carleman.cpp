#include "cauchy/carleman.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cauchy {

CarlemanWeight weight_table(const Grid& grid, double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be >= 0");
  CarlemanWeight w;
  w.lambda = lambda;
  w.table.resize(grid.nx, grid.nt);
  for (int j = 0; j < grid.nt; ++j)
    for (int i = 0; i < grid.nx; ++i)
      w.table(i, j) = std::exp(2.0 * lambda * carleman_level(grid.x(i), grid.t(j)));
  if (!w.table.allFinite() || (w.table.array() <= 0.0).any())
    throw std::range_error("Carleman weight out of double range for lambda=" +
                           std::to_string(lambda));
  return w;
}

LevelDomainMask level_domain_mask(const Grid& grid, double alpha) {
  const double upper = 1.0 - grid.t_half * grid.t_half;
  if (!(alpha > 0.0 && alpha < upper))
    throw std::invalid_argument("alpha must lie in (0, 1 - T^2) = (0, " + std::to_string(upper) +
                                ")");
  LevelDomainMask m;
  m.alpha = alpha;
  m.mask = BoolMatrix::Constant(grid.nx, grid.nt, false);
  // t = +-T lies outside the open time interval
  for (int j = 1; j + 1 < grid.nt; ++j)
    for (int i = 0; i < grid.nx; ++i)
      m.mask(i, j) = carleman_level(grid.x(i), grid.t(j)) > alpha;
  return m;
}

}  // namespace cauchy
