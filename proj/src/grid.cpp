#include "cauchy/grid.hpp"

namespace cauchy {

Grid make_grid(int nx, int nt, double t_half) {
  if (nx < 4 || nt < 4)
    throw std::invalid_argument("invalid mesh: nx and nt must be at least 4 (got nx=" +
                                std::to_string(nx) + ", nt=" + std::to_string(nt) + ")");
  if (!(t_half > 0.0 && t_half < 1.0))
    throw std::invalid_argument("invalid mesh: t_half must lie in (0,1), got " +
                                std::to_string(t_half));
  Grid g;
  g.nx = nx;
  g.nt = nt;
  g.t_half = t_half;
  g.h = 1.0 / static_cast<double>(nx - 1);
  g.tau = 2.0 * t_half / static_cast<double>(nt - 1);
  return g;
}

}  // namespace cauchy
