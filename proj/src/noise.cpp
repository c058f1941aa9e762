#include "cauchy/noise.hpp"

#include <random>
#include <stdexcept>

namespace cauchy {

NoisyRows apply_noise(const CauchyData& data, const NoiseSpec& spec, double h) {
  if (!(spec.level >= 0.0)) throw std::invalid_argument("noise level must be >= 0");
  if (!(h > 0.0)) throw std::invalid_argument("grid step h must be positive");
  if (data.p_row.size() != data.q_row.size())
    throw std::invalid_argument("p and q rows differ in length");

  const Eigen::Index m = data.p_row.size();
  const double p_max = data.p_row.cwiseAbs().maxCoeff();
  const double q_max = data.q_row.cwiseAbs().maxCoeff();

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  Eigen::VectorXd sigma_p(m), sigma_q(m);
  for (Eigen::Index j = 0; j < m; ++j) sigma_p[j] = uniform(rng);
  for (Eigen::Index j = 0; j < m; ++j) sigma_q[j] = uniform(rng);

  NoisyRows rows;
  rows.last.resize(m);
  rows.second_last.resize(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const double p = data.p_row[j];
    const double q = data.q_row[j];
    rows.last[j] = p + spec.level * p_max * sigma_p[j];
    rows.second_last[j] = p - h * (q + spec.level * q_max * sigma_q[j]);
  }
  return rows;
}

}  // namespace cauchy
