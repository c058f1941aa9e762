// Fixed-step descent on the discrete functional with the constrained
// boundary rows held at their data values.
#pragma once

#include "cauchy/functional.hpp"
#include "cauchy/noise.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cauchy {

enum class Method { FixedStepGD, FixedStepCG };

Method method_from_name(const std::string& name);
std::string method_name(Method m);

struct MinimizerConfig {
  Method method = Method::FixedStepGD;
  double step = 1e-8;
  int iterations = 10000;
  int record_every = 100;
};

struct MinimizeReport {
  FieldD final;
  std::vector<int> iter_history;
  std::vector<double> j_history;
  std::vector<double> grad_norm_history;  // Euclidean norm of the masked gradient
};

class MinimizerDivergence : public std::runtime_error {
 public:
  MinimizerDivergence(int iteration, const std::string& what)
      : std::runtime_error(what), iteration_(iteration) {}
  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

/// Zero field with columns i = N-2, N-1 set to the noisy rows. When
/// known_initial is given, row j = 0 is set to it instead.
FieldD initial_guess(const FunctionalContext& ctx, const NoisyRows& rows,
                     const std::optional<Eigen::VectorXd>& known_initial = std::nullopt);

/// Called after each iteration with (iteration index, iterate). Used by tests.
using IterateObserver = std::function<void(int, const FieldD&)>;

/// GD: u <- u - step * grad. CG: Fletcher-Reeves directions from the same
/// masked gradients, fixed step, restart every min(free count, 1000)
/// iterations. History is recorded at iteration 0, every record_every
/// iterations, and at the final iterate.
MinimizeReport minimize(const FunctionalContext& ctx, const FieldD& start,
                        const MinimizerConfig& cfg, const IterateObserver& observer = {});

}  // namespace cauchy
