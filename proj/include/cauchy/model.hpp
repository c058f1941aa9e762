// PDE problem definition for u_t = u_xx + a S(u) + F(x,t) on (0,1) x (-T,T).
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace cauchy {

enum class NonlinearityTag { None, Sin2, Exp04, Custom };

/// The nonlinearity S together with its derivative S'.
class Nonlinearity {
 public:
  using Fn = std::function<double(double)>;

  Nonlinearity() = default;
  explicit Nonlinearity(NonlinearityTag tag) : tag_(tag) {
    if (tag == NonlinearityTag::Custom)
      throw std::invalid_argument("custom nonlinearity needs explicit S and S'");
  }
  /// Programmatic S with user-supplied derivative.
  Nonlinearity(Fn s, Fn s_prime)
      : tag_(NonlinearityTag::Custom), s_(std::move(s)), s_prime_(std::move(s_prime)) {}

  static Nonlinearity none() { return Nonlinearity(NonlinearityTag::None); }
  static Nonlinearity sin2() { return Nonlinearity(NonlinearityTag::Sin2); }
  static Nonlinearity exp04() { return Nonlinearity(NonlinearityTag::Exp04); }

  /// "none", "sin2" or "exp04"; anything else throws std::invalid_argument.
  static Nonlinearity from_name(const std::string& name);

  NonlinearityTag tag() const { return tag_; }
  std::string name() const;

  /// Returns (S(u), S'(u)).
  template <typename Scalar>
  std::pair<Scalar, Scalar> eval(Scalar u) const {
    using std::exp;
    using std::sin;
    switch (tag_) {
      case NonlinearityTag::None:
        return {Scalar(0), Scalar(0)};
      case NonlinearityTag::Sin2: {
        const Scalar s = sin(u);
        return {s * s, sin(Scalar(2) * u)};
      }
      case NonlinearityTag::Exp04: {
        const Scalar e = exp(Scalar(0.4L) * u);
        return {e, Scalar(0.4L) * e};
      }
      case NonlinearityTag::Custom:
        return {static_cast<Scalar>(s_(static_cast<double>(u))),
                static_cast<Scalar>(s_prime_(static_cast<double>(u)))};
    }
    return {Scalar(0), Scalar(0)};
  }

 private:
  NonlinearityTag tag_ = NonlinearityTag::None;
  Fn s_;
  Fn s_prime_;
};

/// (S(u), S'(u)); throws std::overflow_error when either is non-finite.
std::pair<double, double> eval_nonlinearity(const Nonlinearity& kind, double u);

struct ProblemSpec {
  double a = 0.0;
  Nonlinearity s_kind;
  std::function<double(double, double)> source;  // F(x, t)
  std::function<double(double)> initial;        // f(x) = u(x, -T)
  std::function<double(double)> left_bc;         // g(t) = u(0, t)
  std::function<double(double)> right_bc;        // p(t) = u(1, t)
};

/// The test problem with F = 10 sin(100((x-1/2)^2 + t^2)), f = 10(x - x^2),
/// g = 10 sin(10(t-1/2)(t+1/2)), p = sin(10(t+1/2)). Rejects a < 0.
ProblemSpec paper_problem(double a, Nonlinearity s_kind);

/// All data identically zero.
ProblemSpec zero_problem(double a, Nonlinearity s_kind);

}  // namespace cauchy
