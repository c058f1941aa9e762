#include "cauchy/noise.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <random>

using namespace cauchy;

namespace {

const auto zero_source = [](double, double) { return 0.0; };

FieldD random_field(const Grid& g, std::mt19937_64& rng, double amp) {
  std::uniform_real_distribution<double> d(-amp, amp);
  FieldD u(g);
  for (Eigen::Index k = 0; k < u.values().size(); ++k) u.values().data()[k] = d(rng);
  return u;
}

}  // namespace

TEST(FdGradient, QuadraticCaseAgreesTightly) {
  std::mt19937_64 rng(1);
  const Grid g = make_grid(8, 16, 0.5);
  const auto ctx = make_context(g, 0.0, Nonlinearity::none(), paper_problem(0, Nonlinearity::none()).source,
                                4.0, 0.00063);
  const FieldD u = random_field(g, rng, 2.0);
  const FieldD fd = oracle::fd_gradient(ctx, u, 1e-5);
  const FieldD an = gradient_J(ctx, u);
  for (int j = 0; j < g.nt; ++j)
    for (int i = 0; i < g.nx; ++i)
      if (!ctx.constraint_mask(i, j))
        EXPECT_LE(std::abs(fd(i, j) - an(i, j)), 1e-8 * std::abs(an(i, j))) << i << "," << j;
}

TEST(FdGradient, ZeroAtHomogeneousOrigin) {
  const Grid g = make_grid(6, 8, 0.5);
  const auto ctx = make_context(g, 0.0, Nonlinearity::none(), zero_source, 3.0, 0.5);
  EXPECT_EQ(oracle::fd_gradient(ctx, FieldD(g), 1e-5).values().cwiseAbs().maxCoeff(), 0.0);
}

TEST(FdGradient, Sin2Agreement) {
  std::mt19937_64 rng(2);
  const Grid g = make_grid(8, 16, 0.5);
  const auto ctx = make_context(g, 10.0, Nonlinearity::sin2(), zero_source, 3.0, 0.00063);
  const FieldD u = random_field(g, rng, 4.0);
  const FieldD fd = oracle::fd_gradient(ctx, u, 1e-6);
  const FieldD an = gradient_J(ctx, u);
  for (int j = 0; j < g.nt; ++j)
    for (int i = 0; i < g.nx; ++i)
      if (!ctx.constraint_mask(i, j)) EXPECT_LE(std::abs(fd(i, j) - an(i, j)), 1e-6 * std::abs(fd(i, j)));
}

TEST(DenseMinimizer, GradientVanishes) {
  const Grid g = make_grid(8, 16, 0.5);
  const auto spec = paper_problem(0.0, Nonlinearity::none());
  const auto ctx = make_context(g, spec, 4.0, 0.00063);
  const auto rows = apply_noise(extract_flux(solve_forward(spec, g)), NoiseSpec{0.05, 1}, g.h);
  FieldD start(g);
  start.values().row(g.nx - 1) = rows.last.transpose();
  start.values().row(g.nx - 2) = rows.second_last.transpose();
  const FieldD umin = oracle::dense_minimizer(ctx, start);

  FieldD base = start;
  const FieldD rhs = gradient_J(ctx, base);  // free entries of start are zero
  EXPECT_LE(gradient_J(ctx, umin).values().norm(), 1e-9 * (1.0 + rhs.values().norm()));
  EXPECT_EQ(umin.values().row(g.nx - 1), start.values().row(g.nx - 1));
  EXPECT_EQ(umin.values().row(g.nx - 2), start.values().row(g.nx - 2));
}

TEST(DenseMinimizer, RegularizerDominatedLimitIsZero) {
  const Grid g = make_grid(8, 16, 0.5);
  const auto ctx = make_context(g, 0.0, Nonlinearity::none(), zero_source, 4.0, 1e3);
  const FieldD umin = oracle::dense_minimizer(ctx, FieldD(g));
  EXPECT_LE(umin.values().norm(), 1e-6);
}

TEST(DenseMinimizer, FixedPointOfGradientDescent) {
  const Grid g = make_grid(6, 8, 0.5);
  const auto ctx = make_context(g, 0.0, Nonlinearity::none(), paper_problem(0, Nonlinearity::none()).source,
                                3.0, 0.00063);
  const FieldD umin = oracle::dense_minimizer(ctx, FieldD(g));
  FieldD u = umin;
  for (int it = 0; it < 50; ++it) u.values() -= 1e-6 * gradient_J(ctx, u).values();
  EXPECT_LE((u.values() - umin.values()).norm(), 1e-9 * (1.0 + umin.values().norm()));
}

TEST(DenseMinimizer, RejectsNonlinear) {
  const Grid g = make_grid(6, 8, 0.5);
  const auto ctx = make_context(g, 10.0, Nonlinearity::sin2(), zero_source, 3.0, 0.00063);
  EXPECT_THROW(oracle::dense_minimizer(ctx, FieldD(g)), std::invalid_argument);
}

TEST(FreeHessian, SymmetricAndPositiveDefinite) {
  const Grid g = make_grid(6, 8, 0.5);
  for (double lambda : {0.0, 3.0, 4.0}) {
    const auto ctx = make_context(g, 0.0, Nonlinearity::none(), zero_source, lambda, 0.00063);
    const oracle::MatrixLD h = oracle::free_hessian(ctx);
    const long double asym = (h - h.transpose()).cwiseAbs().maxCoeff();
    EXPECT_LE(static_cast<double>(asym), 1e-10 * static_cast<double>(h.cwiseAbs().maxCoeff()));
    const Eigen::MatrixXd hd = (0.5L * (h + h.transpose())).cast<double>();
    const double smallest = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(hd).eigenvalues().minCoeff();
    EXPECT_GE(smallest, ctx.beta * 2.0 / (g.nx * g.nt) * (1 - 1e-10)) << "lambda=" << lambda;
  }
}
