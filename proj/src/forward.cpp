#include "cauchy/forward.hpp"

#include <cmath>

namespace cauchy {

void solve_tridiagonal_constant(double diag, double off, std::vector<double>& rhs,
                                std::vector<double>& scratch) {
  const std::size_t n = rhs.size();
  if (n == 0) return;
  scratch.resize(n);
  // forward sweep: scratch holds the modified super-diagonal
  double denom = diag;
  scratch[0] = off / denom;
  rhs[0] /= denom;
  for (std::size_t k = 1; k < n; ++k) {
    denom = diag - off * scratch[k - 1];
    scratch[k] = off / denom;
    rhs[k] = (rhs[k] - off * rhs[k - 1]) / denom;
  }
  for (std::size_t k = n - 1; k-- > 0;) rhs[k] -= scratch[k] * rhs[k + 1];
}

FieldD solve_forward(const ProblemSpec& spec, const Grid& grid) {
  const int nx = grid.nx;
  const int nt = grid.nt;
  const double r = grid.tau / (grid.h * grid.h);

  FieldD u(grid);
  for (int i = 1; i < nx - 1; ++i) u(i, 0) = spec.initial(grid.x(i));
  for (int j = 0; j < nt; ++j) {
    u(0, j) = spec.left_bc(grid.t(j));
    u(nx - 1, j) = spec.right_bc(grid.t(j));
  }
  if (!u.values().col(0).allFinite())
    throw ForwardDivergence(0, "forward solve: non-finite data at layer 0");

  std::vector<double> rhs(static_cast<std::size_t>(nx - 2));
  std::vector<double> scratch;
  for (int j = 0; j + 1 < nt; ++j) {
    const double t = grid.t(j);
    for (int i = 1; i < nx - 1; ++i) {
      const double s = spec.a == 0.0 ? 0.0 : spec.s_kind.eval(u(i, j)).first;
      const double phi = spec.a * s + spec.source(grid.x(i), t);
      rhs[static_cast<std::size_t>(i - 1)] = u(i, j) + grid.tau * phi;
    }
    rhs.front() += r * u(0, j + 1);
    rhs.back() += r * u(nx - 1, j + 1);
    solve_tridiagonal_constant(1.0 + 2.0 * r, -r, rhs, scratch);
    for (int i = 1; i < nx - 1; ++i) u(i, j + 1) = rhs[static_cast<std::size_t>(i - 1)];
    if (!u.values().col(j + 1).allFinite())
      throw ForwardDivergence(j + 1, "forward solve diverged: non-finite values at layer " +
                                         std::to_string(j + 1));
  }
  return u;
}

CauchyData extract_flux(const FieldD& u) {
  const Grid& g = u.grid();
  CauchyData d;
  d.p_row = u.values().row(g.nx - 1).transpose();
  d.q_row = (u.values().row(g.nx - 1) - u.values().row(g.nx - 2)).transpose() / g.h;
  return d;
}

}  // namespace cauchy
