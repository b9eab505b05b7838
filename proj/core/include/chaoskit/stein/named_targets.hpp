#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chaoskit/stein/target_measure.hpp"

namespace chaoskit::stein {

enum class target_kind { normal, student, pareto, gamma, inverse_gamma, f_dist, uniform_centered, beta };

using param_map = std::map<std::string, double, std::less<>>;

/// One of the classical laws whose centered Stein coefficient is a quadratic.
/// Parameters (validated on construction):
///   normal {gamma > 0}            variance gamma
///   student {nu > 1}
///   pareto {nu > 1}               density nu (1+x)^{-nu-1} on x > 0
///   gamma {a > 0, lambda > 0}     shape a, rate lambda
///   inverse_gamma {delta > 0, lambda > 1}
///   f {a >= 2, b > 2}
///   uniform {}                    U(0, 1)
///   beta {a > 0, b > 0}
struct named_target {
  target_kind kind;
  param_map params;

  /// Throws validation_error naming the offending parameter.
  static named_target make(std::string_view name, const param_map& params);

  [[nodiscard]] std::string_view name() const noexcept;
  [[nodiscard]] double param(std::string_view key) const;
};

[[nodiscard]] const std::vector<std::string_view>& target_names();
[[nodiscard]] std::vector<std::string_view> target_param_names(std::string_view name);

/// Closed-form (alpha, beta, gamma) of the centered law.
[[nodiscard]] poly_coeff closed_form_coeff(const named_target& t);

/// Mean of the uncentered law; the stored measure is shifted by it.
[[nodiscard]] double uncentered_mean(const named_target& t);

/// Centered target measure with polynomial coefficient and closed-form cdf/quantile.
[[nodiscard]] target_measure make_target(const named_target& t);

[[nodiscard]] target_measure normal_target(double variance);
[[nodiscard]] target_measure student_target(double nu);
[[nodiscard]] target_measure pareto_target(double nu);
[[nodiscard]] target_measure gamma_target(double shape, double rate);
[[nodiscard]] target_measure inverse_gamma_target(double delta, double lambda);
[[nodiscard]] target_measure f_target(double a, double b);
[[nodiscard]] target_measure uniform_target();
[[nodiscard]] target_measure beta_target(double a, double b);

}  // namespace chaoskit::stein
