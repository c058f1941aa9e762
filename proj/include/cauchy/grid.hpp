// Uniform space-time mesh on [0,1] x [-T,T] and dense grid functions over it.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace cauchy {

/// Uniform rectangular mesh. Node i sits at x_i = i/(nx-1), node j at
/// t_j = -T + 2T*j/(nt-1), so both endpoints are hit exactly.
struct Grid {
  int nx = 0;
  int nt = 0;
  double t_half = 0.0;
  double h = 0.0;
  double tau = 0.0;

  double x(int i) const {
    return static_cast<double>(i) / static_cast<double>(nx - 1);
  }

  double t(int j) const {
    const double s = static_cast<double>(j) / static_cast<double>(nt - 1);
    return -t_half + 2.0 * t_half * s;
  }

  int size() const { return nx * nt; }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.nx == b.nx && a.nt == b.nt && a.t_half == b.t_half;
  }
};

/// Rejects nx < 4, nt < 4 and t_half outside (0,1) with std::invalid_argument.
Grid make_grid(int nx, int nt, double t_half);

/// Value table over a Grid. values()(i, j) is the value at (x_i, t_j):
/// rows are space, columns are time.
template <typename Scalar>
class Field {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Field() = default;
  explicit Field(const Grid& grid) : grid_(grid), values_(Matrix::Zero(grid.nx, grid.nt)) {}
  Field(const Grid& grid, Matrix values) : grid_(grid), values_(std::move(values)) {
    if (values_.rows() != grid.nx || values_.cols() != grid.nt)
      throw std::invalid_argument("field dimensions do not match grid");
  }

  const Grid& grid() const { return grid_; }
  const Matrix& values() const { return values_; }
  Matrix& values() { return values_; }

  Scalar operator()(int i, int j) const { return values_(i, j); }
  Scalar& operator()(int i, int j) { return values_(i, j); }

  bool all_finite() const { return values_.allFinite(); }

  template <typename Other>
  Field<Other> cast() const {
    return Field<Other>(grid_, values_.template cast<Other>());
  }

 private:
  Grid grid_;
  Matrix values_;
};

using FieldD = Field<double>;

/// Evaluates func at every node. Throws std::domain_error on a non-finite sample.
template <typename Scalar = double>
Field<Scalar> sample(const std::function<double(double, double)>& func, const Grid& grid) {
  Field<Scalar> out(grid);
  for (int j = 0; j < grid.nt; ++j) {
    const double t = grid.t(j);
    for (int i = 0; i < grid.nx; ++i) {
      const double v = func(grid.x(i), t);
      if (!std::isfinite(v))
        throw std::domain_error("non-finite function value at node (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
      out(i, j) = static_cast<Scalar>(v);
    }
  }
  return out;
}

}  // namespace cauchy
