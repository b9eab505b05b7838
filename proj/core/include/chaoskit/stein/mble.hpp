#pragma once

#include <span>
#include <variant>

namespace chaoskit::stein {

// Functionals of a few unit-norm Gaussian coordinates w_k = W(h_k) whose
// <D(-L)^{-1}(F - EF), DF> is a function of F alone.

/// F = c W(h)
struct mble_linear {
  double c = 1.0;
};
/// F = c (W(h)^2 - 1)
struct mble_quadratic {
  double c = 1.0;
};
/// F = exp(c W(h))
struct mble_lognormal {
  double c = 1.0;
};
/// F = exp(c sum_{k<n} W(h_k)^2), c < 1/2
struct mble_exp_chi2 {
  double c = 0.25;
  int n = 2;
};

using mble_case = std::variant<mble_linear, mble_quadratic, mble_lognormal, mble_exp_chi2>;

/// Throws validation_error for out-of-range parameters.
void validate(const mble_case& mc);

/// Number of Gaussian coordinates the case consumes.
[[nodiscard]] int mble_arity(const mble_case& mc);

/// F at the realization w (w.size() == mble_arity).
[[nodiscard]] double mble_functional(const mble_case& mc, std::span<const double> w);

/// E F.
[[nodiscard]] double mble_mean(const mble_case& mc);

/// Var F; infinite when the second moment is (exp_chi2 with c >= 1/4).
[[nodiscard]] double mble_variance(const mble_case& mc);

/// <D(-L)^{-1}(F - EF), DF>_H at the realization, from its closed form in F.
/// The last two cases integrate over v in [0, 1] numerically.
[[nodiscard]] double mble_inner_product(const mble_case& mc, std::span<const double> w);

}  // namespace chaoskit::stein
