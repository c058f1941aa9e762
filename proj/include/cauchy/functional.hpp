// Discrete Carleman-weighted Tikhonov functional
//
//   J(u) = 1/(N M) [ sum_{i=1}^{N-2} sum_{j=0}^{M-2} K_ij^2 phi^2_ij
//                    + beta sum_{i=1}^{N-2} sum_{j=1}^{M-2} Y_ij ]
//
//   K_ij = (u_{i,j+1} - u_ij)/tau - (u_{i-1,j} - 2u_ij + u_{i+1,j})/h^2
//          - a S(u_ij) - F_ij
//   Y_ij = u_ij^2 + Ut^2 + Ux^2 + Utt^2 + Uxx^2   (forward first differences,
//          centered second differences)
//
// and its exact gradient. Every stencil of Y is interior on the summation
// range, so the truncated-difference cases never trigger there.
#pragma once

#include "cauchy/carleman.hpp"
#include "cauchy/grid.hpp"
#include "cauchy/model.hpp"

#include <cmath>

namespace cauchy {

struct FunctionalContext {
  Grid grid;
  CarlemanWeight weight;
  double beta = 0.0;
  double a = 0.0;
  Nonlinearity s_kind;
  Eigen::MatrixXd source_table;
  BoolMatrix constraint_mask;  // true = value held fixed, gradient forced to 0
  bool known_initial = false;

  int free_count() const { return static_cast<int>(constraint_mask.size() - constraint_mask.count()); }
};

/// Constrained nodes: i = 0, i = N-2, i = N-1, j = 0, j = M-1.
BoolMatrix boundary_constraint_mask(const Grid& grid);

/// Builds the context. beta must be finite and >= 0 (the convexity theory
/// wants 0 < beta < 1; beta = 0 and large beta are accepted for testing).
FunctionalContext make_context(const Grid& grid, double a, Nonlinearity s_kind,
                               const std::function<double(double, double)>& source, double lambda,
                               double beta, bool known_initial = false);

FunctionalContext make_context(const Grid& grid, const ProblemSpec& spec, double lambda,
                               double beta, bool known_initial = false);

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// K_ij for i in [1, N-2], j in [0, M-2], stored at (i-1, j).
template <typename Scalar>
MatrixX<Scalar> residual_table(const FunctionalContext& ctx, const Field<Scalar>& u) {
  const Grid& g = ctx.grid;
  const Scalar inv_tau = Scalar(1) / Scalar(g.tau);
  const Scalar inv_h2 = Scalar(1) / (Scalar(g.h) * Scalar(g.h));
  const Scalar a = Scalar(ctx.a);
  MatrixX<Scalar> k(g.nx - 2, g.nt - 1);
  for (int j = 0; j + 1 < g.nt; ++j) {
    for (int i = 1; i + 1 < g.nx; ++i) {
      const Scalar uij = u(i, j);
      Scalar r = (u(i, j + 1) - uij) * inv_tau -
                 (u(i - 1, j) - Scalar(2) * uij + u(i + 1, j)) * inv_h2 -
                 Scalar(ctx.source_table(i, j));
      if (ctx.a != 0.0) r -= a * ctx.s_kind.eval(uij).first;
      k(i - 1, j) = r;
    }
  }
  return k;
}

/// Sum of Y_ij over i in [1, N-2], j in [1, M-2]: the discrete H^2 surrogate
/// that beta multiplies.
template <typename Scalar>
Scalar regularizer_sum(const Grid& g, const Field<Scalar>& u) {
  const Scalar inv_tau = Scalar(1) / Scalar(g.tau);
  const Scalar inv_h = Scalar(1) / Scalar(g.h);
  const Scalar inv_tau2 = inv_tau * inv_tau;
  const Scalar inv_h2 = inv_h * inv_h;
  Scalar sum(0);
  for (int j = 1; j + 1 < g.nt; ++j) {
    for (int i = 1; i + 1 < g.nx; ++i) {
      const Scalar uij = u(i, j);
      const Scalar ut = (u(i, j + 1) - uij) * inv_tau;
      const Scalar ux = (u(i + 1, j) - uij) * inv_h;
      const Scalar utt = (u(i, j - 1) - Scalar(2) * uij + u(i, j + 1)) * inv_tau2;
      const Scalar uxx = (u(i - 1, j) - Scalar(2) * uij + u(i + 1, j)) * inv_h2;
      sum += uij * uij + ut * ut + ux * ux + utt * utt + uxx * uxx;
    }
  }
  return sum;
}

template <typename Scalar>
Scalar evaluate_J(const FunctionalContext& ctx, const Field<Scalar>& u) {
  const Grid& g = ctx.grid;
  const MatrixX<Scalar> k = residual_table(ctx, u);
  Scalar carleman(0);
  for (int j = 0; j + 1 < g.nt; ++j)
    for (int i = 1; i + 1 < g.nx; ++i) {
      const Scalar kij = k(i - 1, j);
      carleman += kij * kij * Scalar(ctx.weight.table(i, j));
    }
  const Scalar reg = regularizer_sum(g, u);
  return (carleman + Scalar(ctx.beta) * reg) / (Scalar(g.nx) * Scalar(g.nt));
}

/// J(u) and its gradient. The gradient is the exact derivative of
/// evaluate_J, zeroed wherever ctx.constraint_mask is set.
template <typename Scalar>
Scalar value_and_gradient(const FunctionalContext& ctx, const Field<Scalar>& u,
                          Field<Scalar>& grad) {
  const Grid& g = ctx.grid;
  const Scalar inv_tau = Scalar(1) / Scalar(g.tau);
  const Scalar inv_h = Scalar(1) / Scalar(g.h);
  const Scalar inv_tau2 = inv_tau * inv_tau;
  const Scalar inv_h2 = inv_h * inv_h;
  const Scalar scale = Scalar(1) / (Scalar(g.nx) * Scalar(g.nt));
  const Scalar two_scale = Scalar(2) * scale;
  const Scalar a = Scalar(ctx.a);
  const bool nonlinear = ctx.a != 0.0;

  if (grad.values().rows() != g.nx || grad.values().cols() != g.nt) grad = Field<Scalar>(g);
  auto& gv = grad.values();
  gv.setZero();

  // Carleman-weighted residual term: adjoint of the K stencil.
  Scalar carleman(0);
  for (int j = 0; j + 1 < g.nt; ++j) {
    for (int i = 1; i + 1 < g.nx; ++i) {
      const Scalar uij = u(i, j);
      Scalar kij = (u(i, j + 1) - uij) * inv_tau -
                   (u(i - 1, j) - Scalar(2) * uij + u(i + 1, j)) * inv_h2 -
                   Scalar(ctx.source_table(i, j));
      Scalar ds(0);
      if (nonlinear) {
        const auto [s, s_prime] = ctx.s_kind.eval(uij);
        kij -= a * s;
        ds = a * s_prime;
      }
      const Scalar wk = Scalar(ctx.weight.table(i, j)) * kij;
      carleman += wk * kij;
      const Scalar r = two_scale * wk;
      gv(i, j + 1) += r * inv_tau;
      gv(i, j) += r * (Scalar(2) * inv_h2 - inv_tau - ds);
      gv(i - 1, j) -= r * inv_h2;
      gv(i + 1, j) -= r * inv_h2;
    }
  }

  // beta * Y term.
  Scalar reg(0);
  const Scalar c = Scalar(2) * Scalar(ctx.beta) * scale;
  for (int j = 1; j + 1 < g.nt; ++j) {
    for (int i = 1; i + 1 < g.nx; ++i) {
      const Scalar uij = u(i, j);
      const Scalar ut = (u(i, j + 1) - uij) * inv_tau;
      const Scalar ux = (u(i + 1, j) - uij) * inv_h;
      const Scalar utt = (u(i, j - 1) - Scalar(2) * uij + u(i, j + 1)) * inv_tau2;
      const Scalar uxx = (u(i - 1, j) - Scalar(2) * uij + u(i + 1, j)) * inv_h2;
      reg += uij * uij + ut * ut + ux * ux + utt * utt + uxx * uxx;

      const Scalar ct = c * ut * inv_tau;
      const Scalar cx = c * ux * inv_h;
      const Scalar ctt = c * utt * inv_tau2;
      const Scalar cxx = c * uxx * inv_h2;
      gv(i, j) += c * uij - ct - cx - Scalar(2) * (ctt + cxx);
      gv(i, j + 1) += ct + ctt;
      gv(i, j - 1) += ctt;
      gv(i + 1, j) += cx + cxx;
      gv(i - 1, j) += cxx;
    }
  }

  for (Eigen::Index idx = 0; idx < gv.size(); ++idx)
    if (ctx.constraint_mask.data()[idx]) gv.data()[idx] = Scalar(0);

  return (carleman + Scalar(ctx.beta) * reg) * scale;
}

template <typename Scalar>
Field<Scalar> gradient_J(const FunctionalContext& ctx, const Field<Scalar>& u) {
  Field<Scalar> grad(ctx.grid);
  value_and_gradient(ctx, u, grad);
  return grad;
}

}  // namespace cauchy
