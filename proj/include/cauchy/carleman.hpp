// Carleman weight phi_lambda(x,t) = exp(lambda (x^2 - t^2)) and the level
// domains {x^2 - t^2 > alpha}.
#pragma once

#include "cauchy/grid.hpp"

namespace cauchy {

/// Level function psi(x, t) = x^2 - t^2 shared by the weight and the masks.
inline double carleman_level(double x, double t) { return x * x - t * t; }

struct CarlemanWeight {
  double lambda = 0.0;
  Eigen::MatrixXd table;  // squared weight phi^2 at (i, j)
};

/// Squared weights exp(2 lambda (x_i^2 - t_j^2)). Rejects lambda < 0 with
/// std::invalid_argument and overflowing weights with std::range_error.
CarlemanWeight weight_table(const Grid& grid, double lambda);

using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

struct LevelDomainMask {
  double alpha = 0.0;
  BoolMatrix mask;  // true where x_i^2 - t_j^2 > alpha and |t_j| < T

  Eigen::Index count() const { return mask.count(); }
};

/// Requires 0 < alpha < 1 - T^2.
LevelDomainMask level_domain_mask(const Grid& grid, double alpha);

}  // namespace cauchy
