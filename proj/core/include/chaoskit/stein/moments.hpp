#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chaoskit/stein/target_measure.hpp"

namespace chaoskit::stein {

/// Throws excluded_alpha_error when alpha is (numerically) 1, 2 or 2/3.
void require_admissible_alpha(double alpha);
[[nodiscard]] bool is_excluded_alpha(double alpha) noexcept;

struct poly_moment_set {
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
};

/// Second, third and fourth moments of the centered law with coefficient c.
[[nodiscard]] poly_moment_set poly_moments(const poly_coeff& c);

/// Solves (1 - (j-1)alpha/2) E X^j = (j-1)/2 (beta E X^{j-1} + gamma E X^{j-2})
/// for E X^j, where lower[i] = E X^i for i < j. Throws validation_error
/// when the leading factor is not positive (the moment is infinite).
[[nodiscard]] double moment_recursion(const poly_coeff& c, int j, const std::vector<double>& lower);

/// E X^0 .. E X^max_order of the centered law.
[[nodiscard]] std::vector<double> moment_sequence(const poly_coeff& c, int max_order);

/// C^1 test function h with polynomial growth bookkeeping.
struct test_function {
  std::string name;
  real_fn h;
  real_fn dh;
  double growth = 0.0;       ///< |h(x)| = O(|x|^growth)
  double deriv_growth = 0.0; ///< |h'(x)| = O(|x|^deriv_growth)

  static test_function monomial(int k);
  static test_function sine();
  /// {x, x^2, x^3, sin x}
  static std::vector<test_function> dictionary();
};

/// E[1/2 a(X) h'(X) + b(X) h(X)] by quadrature. Throws validation_error
/// when the moments needed for integrability are infinite.
[[nodiscard]] double stein_identity_residual(const target_measure& target, const test_function& h);

/// Growth exponent of a(x) used by the integrability check.
[[nodiscard]] double coeff_growth(const target_measure& target);

}  // namespace chaoskit::stein
