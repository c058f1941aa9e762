// Forward solver for the well-posed initial-boundary value problem and
// extraction of the lateral Cauchy data at x = 1.
#pragma once

#include "cauchy/grid.hpp"
#include "cauchy/model.hpp"

#include <stdexcept>
#include <vector>

namespace cauchy {

/// Lateral data at x = 1: p = u(1, t_j), q = u_x(1, t_j).
struct CauchyData {
  Eigen::VectorXd p_row;
  Eigen::VectorXd q_row;
};

class ForwardDivergence : public std::runtime_error {
 public:
  ForwardDivergence(int layer, const std::string& what)
      : std::runtime_error(what), layer_(layer) {}
  int layer() const { return layer_; }

 private:
  int layer_;
};

/// Semi-implicit scheme: diffusion at the new level, a S(u) + F at the old
/// level, one tridiagonal solve per step.
///
/// Row j = 0 holds f at interior nodes; columns i = 0 and i = N-1 hold g and p
/// at every level including j = 0. Throws ForwardDivergence naming the first
/// non-finite layer.
FieldD solve_forward(const ProblemSpec& spec, const Grid& grid);

/// p_j = u_{N-1,j}, q_j = (u_{N-1,j} - u_{N-2,j}) / h.
CauchyData extract_flux(const FieldD& u);

/// Solves the tridiagonal system with constant sub/super-diagonal `off` and
/// diagonal `diag` in place (Thomas algorithm, no pivoting).
void solve_tridiagonal_constant(double diag, double off, std::vector<double>& rhs,
                                std::vector<double>& scratch);

}  // namespace cauchy
