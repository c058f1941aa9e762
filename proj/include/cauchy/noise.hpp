// Uniform amplitude noise on the lateral Cauchy data.
#pragma once

#include "cauchy/forward.hpp"

#include <cstdint>

namespace cauchy {

struct NoiseSpec {
  double level = 0.05;
  std::uint64_t seed = 0;
};

/// The two boundary rows the inversion holds fixed.
struct NoisyRows {
  Eigen::VectorXd last;         // u~_{N-1, j} = p_j + level p_max sigma_j
  Eigen::VectorXd second_last;  // u~_{N-2, j} = p_j - h (q_j + level q_max sigma'_j)
};

/// sigma and sigma' are independent uniform draws on [-1, 1] from a
/// std::mt19937_64 seeded with spec.seed; all sigma_j are drawn first, then
/// all sigma'_j.
NoisyRows apply_noise(const CauchyData& data, const NoiseSpec& spec, double h);

}  // namespace cauchy
