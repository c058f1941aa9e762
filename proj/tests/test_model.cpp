#include "cauchy/model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace cauchy;

TEST(Nonlinearity, ReferenceValues) {
  auto [s0, d0] = eval_nonlinearity(Nonlinearity::sin2(), 0.0);
  EXPECT_EQ(s0, 0.0);
  EXPECT_EQ(d0, 0.0);
  auto [s1, d1] = eval_nonlinearity(Nonlinearity::exp04(), 0.0);
  EXPECT_EQ(s1, 1.0);
  EXPECT_DOUBLE_EQ(d1, 0.4);
  auto [s2, d2] = eval_nonlinearity(Nonlinearity::sin2(), std::numbers::pi / 4);
  EXPECT_NEAR(s2, 0.5, 1e-15);
  EXPECT_NEAR(d2, 1.0, 1e-15);
  auto [s3, d3] = eval_nonlinearity(Nonlinearity::none(), 3.0);
  EXPECT_EQ(s3, 0.0);
  EXPECT_EQ(d3, 0.0);
}

TEST(Nonlinearity, DerivativeMatchesFiniteDifferences) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  const double eps = 1e-5;
  for (const auto& kind : {Nonlinearity::sin2(), Nonlinearity::exp04(), Nonlinearity::none()}) {
    for (int k = 0; k < 100; ++k) {
      const double u = dist(rng);
      const double fd = (kind.eval(u + eps).first - kind.eval(u - eps).first) / (2 * eps);
      EXPECT_NEAR(kind.eval(u).second, fd, 1e-6) << kind.name() << " at u=" << u;
    }
  }
}

TEST(Nonlinearity, ExpOverflowReported) {
  EXPECT_THROW(eval_nonlinearity(Nonlinearity::exp04(), 5000.0), std::overflow_error);
}

TEST(Nonlinearity, NamesAndCustom) {
  EXPECT_EQ(Nonlinearity::from_name("sin2").tag(), NonlinearityTag::Sin2);
  EXPECT_EQ(Nonlinearity::from_name("exp04").tag(), NonlinearityTag::Exp04);
  EXPECT_EQ(Nonlinearity::from_name("none").tag(), NonlinearityTag::None);
  EXPECT_THROW(Nonlinearity::from_name("cubic"), std::invalid_argument);
  const Nonlinearity cubic([](double u) { return u * u * u; }, [](double u) { return 3 * u * u; });
  EXPECT_EQ(cubic.tag(), NonlinearityTag::Custom);
  EXPECT_DOUBLE_EQ(cubic.eval(2.0).first, 8.0);
  EXPECT_DOUBLE_EQ(cubic.eval(2.0).second, 12.0);
}

TEST(PaperProblem, ClosedFormValues) {
  const ProblemSpec p = paper_problem(10.0, Nonlinearity::sin2());
  EXPECT_EQ(p.a, 10.0);
  EXPECT_DOUBLE_EQ(p.initial(0.5), 2.5);
  EXPECT_EQ(p.left_bc(0.5), 0.0);
  EXPECT_EQ(p.right_bc(-0.5), 0.0);
  EXPECT_THROW(paper_problem(-1.0, Nonlinearity::none()), std::invalid_argument);
}

TEST(PaperProblem, DataBounded) {
  const ProblemSpec p = paper_problem(0.0, Nonlinearity::none());
  for (int i = 0; i <= 200; ++i) {
    const double x = i / 200.0;
    EXPECT_LE(std::abs(p.initial(x)), 2.5);
    for (int j = 0; j <= 200; ++j) {
      const double t = -0.5 + j / 200.0;
      EXPECT_LE(std::abs(p.source(x, t)), 10.0);
    }
  }
  for (int j = 0; j <= 200; ++j) {
    const double t = -0.5 + j / 200.0;
    EXPECT_LE(std::abs(p.left_bc(t)), 10.0);
    EXPECT_LE(std::abs(p.right_bc(t)), 1.0);
  }
}
