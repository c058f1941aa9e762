// Brute-force references used only by the test suites.
#pragma once

#include "cauchy/forward.hpp"
#include "cauchy/functional.hpp"

#include <Eigen/Cholesky>

#include <stdexcept>
#include <vector>

namespace cauchy::oracle {

/// Central differences of evaluate_J, computed in long double so the
/// cancellation error stays far below the 1e-6 comparison threshold.
/// Constrained coordinates are reported as 0.
inline FieldD fd_gradient(const FunctionalContext& ctx, const FieldD& u, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  using LD = long double;
  Field<LD> work = u.cast<LD>();
  FieldD out(ctx.grid);
  for (int j = 0; j < ctx.grid.nt; ++j) {
    for (int i = 0; i < ctx.grid.nx; ++i) {
      if (ctx.constraint_mask(i, j)) continue;
      const LD orig = work(i, j);
      work(i, j) = orig + LD(eps);
      const LD plus = evaluate_J(ctx, work);
      work(i, j) = orig - LD(eps);
      const LD minus = evaluate_J(ctx, work);
      work(i, j) = orig;
      out(i, j) = static_cast<double>((plus - minus) / (LD(2) * LD(eps)));
    }
  }
  return out;
}

/// (i, j) of every unconstrained node, column-major order.
inline std::vector<std::pair<int, int>> free_nodes(const FunctionalContext& ctx) {
  std::vector<std::pair<int, int>> nodes;
  for (int j = 0; j < ctx.grid.nt; ++j)
    for (int i = 0; i < ctx.grid.nx; ++i)
      if (!ctx.constraint_mask(i, j)) nodes.emplace_back(i, j);
  return nodes;
}

using MatrixLD = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using VectorLD = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

/// Hessian of J over the free variables for a = 0, probed column by column
/// through the analytic gradient of the homogeneous problem (F = 0, zero
/// constrained values), which is exactly linear.
inline MatrixLD free_hessian(const FunctionalContext& ctx) {
  if (ctx.a != 0.0) throw std::invalid_argument("free_hessian needs a quadratic functional (a = 0)");
  FunctionalContext homog = ctx;
  homog.source_table.setZero();
  const auto nodes = free_nodes(ctx);
  const auto n = static_cast<Eigen::Index>(nodes.size());
  MatrixLD hess(n, n);
  Field<long double> e(ctx.grid);
  for (Eigen::Index c = 0; c < n; ++c) {
    e.values().setZero();
    e(nodes[static_cast<std::size_t>(c)].first, nodes[static_cast<std::size_t>(c)].second) = 1.0L;
    const Field<long double> col = gradient_J(homog, e);
    for (Eigen::Index r = 0; r < n; ++r)
      hess(r, c) = col(nodes[static_cast<std::size_t>(r)].first, nodes[static_cast<std::size_t>(r)].second);
  }
  return hess;
}

/// Exact minimizer of the quadratic J (a = 0) over the free variables, with
/// constrained entries taken from start. Solves H x = -grad(start with free
/// entries zeroed) by Cholesky in long double.
inline FieldD dense_minimizer(const FunctionalContext& ctx, const FieldD& start) {
  if (ctx.a != 0.0) throw std::invalid_argument("dense_minimizer needs a = 0");
  const auto nodes = free_nodes(ctx);
  if (nodes.size() > 2000) throw std::invalid_argument("too many free variables for a dense solve");
  const MatrixLD hess = free_hessian(ctx);

  Field<long double> base = start.cast<long double>();
  for (const auto& [i, j] : nodes) base(i, j) = 0.0L;
  const Field<long double> g0 = gradient_J(ctx, base);
  VectorLD rhs(static_cast<Eigen::Index>(nodes.size()));
  for (std::size_t k = 0; k < nodes.size(); ++k)
    rhs[static_cast<Eigen::Index>(k)] = -g0(nodes[k].first, nodes[k].second);

  const Eigen::LLT<MatrixLD> llt(hess);
  if (llt.info() != Eigen::Success) throw std::runtime_error("free Hessian is not positive definite");
  const VectorLD x = llt.solve(rhs);

  FieldD out = start;
  for (std::size_t k = 0; k < nodes.size(); ++k)
    out(nodes[k].first, nodes[k].second) = static_cast<double>(x[static_cast<Eigen::Index>(k)]);
  return out;
}

/// Restriction of a field on a (2N-1) x (2M-1) grid to the coarse nodes.
inline FieldD restrict_to_coarse(const FieldD& fine, const Grid& coarse) {
  const Grid& fg = fine.grid();
  if (fg.nx != 2 * coarse.nx - 1 || fg.nt != 2 * coarse.nt - 1)
    throw std::invalid_argument("fine grid is not a uniform refinement of the coarse grid");
  FieldD out(coarse);
  for (int j = 0; j < coarse.nt; ++j)
    for (int i = 0; i < coarse.nx; ++i) out(i, j) = fine(2 * i, 2 * j);
  return out;
}

}  // namespace cauchy::oracle
