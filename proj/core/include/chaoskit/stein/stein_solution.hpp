#pragma once

#include "chaoskit/stein/target_measure.hpp"

namespace chaoskit::stein {

/// Solution of the generalized Stein equation
///   f(x) - m_f = 1/2 a(x) g'(x) + b(x) g(x),
/// g(x) = 2/(a(x)p(x)) int_l^x (f - m_f) p.
class stein_solution {
 public:
  /// Computes m_f = E f(X); throws numeric_error when f is not integrable
  /// to tolerance.
  stein_solution(const target_measure& target, real_fn f);

  [[nodiscard]] double mean() const noexcept { return mean_; }
  [[nodiscard]] double operator()(double x) const;
  /// Five-point central difference, step 1e-5 * scale.
  [[nodiscard]] double derivative(double x) const;
  /// f(x) - m_f - 1/2 a g'(x) - b g(x).
  [[nodiscard]] double residual(double x) const;

 private:
  // int_l^x (f - m_f) p, taken from whichever side of the drift root is nearer.
  [[nodiscard]] double partial_integral(double x) const;
  [[nodiscard]] double step(double x) const;

  const target_measure* target_;
  real_fn f_;
  real_fn centered_;  // (f - m_f) p
  double mean_ = 0.0;
};

}  // namespace chaoskit::stein
