// Reconstruction error measures.
#pragma once

#include "cauchy/carleman.hpp"
#include "cauchy/grid.hpp"

#include <optional>
#include <vector>

namespace cauchy {

/// E(x_i) = ||recon(x_i, .) - truth(x_i, .)||_L2 / ||truth(x_i, .)||_L2.
/// error[i] is empty where the truth norm is below 1e-14.
struct LineErrorProfile {
  std::vector<double> x;
  std::vector<std::optional<double>> error;

  /// Mean of the defined E(x_i) with x_lo <= x_i <= x_hi.
  double mean_over(double x_lo, double x_hi) const;
};

/// Throws std::invalid_argument when the grids differ.
LineErrorProfile line_error(const FieldD& recon, const FieldD& truth);

struct Slice {
  int node = 0;
  double x = 0.0;
  Eigen::VectorXd values;
};

/// Time slice at the node nearest to x; ties go to the smaller index.
int nearest_node(const Grid& grid, double x);
Slice slice_at(const FieldD& field, double x);

/// Discrete H^{1,0} norm of recon - truth over the masked nodes:
/// sqrt(sum (d^2 + d_x^2) h tau), d_x the forward x-difference, included
/// only where the neighbour i+1 is masked too. Throws on an empty mask.
double subdomain_error(const FieldD& recon, const FieldD& truth, const LevelDomainMask& mask);

}  // namespace cauchy
