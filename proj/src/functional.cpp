#include "cauchy/functional.hpp"

#include <stdexcept>

namespace cauchy {

BoolMatrix boundary_constraint_mask(const Grid& grid) {
  BoolMatrix m = BoolMatrix::Constant(grid.nx, grid.nt, false);
  m.row(0).setConstant(true);
  m.row(grid.nx - 2).setConstant(true);
  m.row(grid.nx - 1).setConstant(true);
  m.col(0).setConstant(true);
  m.col(grid.nt - 1).setConstant(true);
  return m;
}

FunctionalContext make_context(const Grid& grid, double a, Nonlinearity s_kind,
                               const std::function<double(double, double)>& source, double lambda,
                               double beta, bool known_initial) {
  if (!(a >= 0.0)) throw std::invalid_argument("nonlinearity strength a must be >= 0");
  if (!(beta >= 0.0) || !std::isfinite(beta))
    throw std::invalid_argument("regularization parameter beta must be finite and >= 0");
  FunctionalContext ctx;
  ctx.grid = grid;
  ctx.weight = weight_table(grid, lambda);
  ctx.beta = beta;
  ctx.a = a;
  ctx.s_kind = std::move(s_kind);
  ctx.source_table = sample(source, grid).values();
  // Row j = 0 is already fixed by the lateral constraints; known_initial
  // additionally pins its values to f in the start field.
  ctx.constraint_mask = boundary_constraint_mask(grid);
  ctx.known_initial = known_initial;
  return ctx;
}

FunctionalContext make_context(const Grid& grid, const ProblemSpec& spec, double lambda,
                               double beta, bool known_initial) {
  return make_context(grid, spec.a, spec.s_kind, spec.source, lambda, beta, known_initial);
}

}  // namespace cauchy
