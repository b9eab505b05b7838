#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "chaoskit/stein/quadrature.hpp"

namespace chaoskit::stein {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

/// Open interval (lower, upper); endpoints may be infinite.
struct interval {
  double lower = -infinity;
  double upper = infinity;

  [[nodiscard]] bool contains(double x) const noexcept { return x > lower && x < upper; }
  [[nodiscard]] bool bounded() const noexcept;
  [[nodiscard]] double width() const noexcept { return upper - lower; }
};

/// a(x) = alpha x^2 + beta x + gamma.
struct poly_coeff {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  [[nodiscard]] double operator()(double x) const noexcept { return (alpha * x + beta) * x + gamma; }
  friend bool operator==(const poly_coeff&, const poly_coeff&) = default;
};

/// Squared diffusion coefficient of the Stein diffusion, either a closed-form
/// quadratic or a quadrature-backed evaluator of 2 int_l^x b p / p(x).
class diffusion_coefficient {
 public:
  static diffusion_coefficient polynomial(poly_coeff c);
  static diffusion_coefficient numeric(real_fn evaluator);

  [[nodiscard]] bool is_polynomial() const noexcept { return poly_.has_value(); }
  /// Throws validation_error for the numeric kind.
  [[nodiscard]] const poly_coeff& coefficients() const;
  [[nodiscard]] double operator()(double x) const { return eval_(x); }

 private:
  std::optional<poly_coeff> poly_;
  real_fn eval_;
};

/// Invariant measure of dX = b(X)dt + sqrt(a(X))dW on an interval.
class target_measure {
 public:
  struct definition {
    std::string name;
    interval support;
    real_fn density;
    real_fn drift;  ///< empty means b(x) = -x
    std::optional<diffusion_coefficient> coeff;  ///< empty means quadrature from density and drift
    real_fn cdf;       ///< optional closed form
    real_fn quantile;  ///< optional closed form
    /// Absolute moments E|X|^k are finite exactly for k < moment_limit.
    double moment_limit = infinity;
    /// Typical spread, used to size finite-difference steps and grids.
    double scale = 1.0;
  };

  explicit target_measure(definition def);

  [[nodiscard]] const std::string& name() const noexcept { return def_.name; }
  [[nodiscard]] const interval& support() const noexcept { return def_.support; }
  [[nodiscard]] const diffusion_coefficient& coeff() const noexcept { return *def_.coeff; }
  [[nodiscard]] double moment_limit() const noexcept { return def_.moment_limit; }
  [[nodiscard]] double scale() const noexcept { return def_.scale; }
  [[nodiscard]] bool has_quantile() const noexcept { return static_cast<bool>(def_.quantile); }

  /// Zero outside the support.
  [[nodiscard]] double density(double x) const;
  [[nodiscard]] double drift(double x) const { return def_.drift ? def_.drift(x) : -x; }
  [[nodiscard]] double a(double x) const { return (*def_.coeff)(x); }
  /// Closed form when available, quadrature of the density otherwise.
  [[nodiscard]] double cdf(double x) const;
  /// Throws validation_error when no closed-form quantile is attached.
  [[nodiscard]] double quantile(double u) const;

  /// int f p over the support.
  [[nodiscard]] double expect(const real_fn& f, const quadrature_options& opts = {}) const;

  /// Split point where the drift changes sign, used to pick the numerically
  /// favourable side for tail integrals.
  [[nodiscard]] double drift_root() const noexcept { return drift_root_; }

 private:
  definition def_;
  double drift_root_ = 0.0;
};

/// Numeric diffusion coefficient a(x) = 2 int_l^x b(y)p(y)dy / p(x).
/// Validates int p = 1 and int b p = 0 (tolerance 1e-8) and a > 0 on an
/// interior grid; throws validation_error otherwise.
[[nodiscard]] diffusion_coefficient coeff_from_density(const real_fn& density, const real_fn& drift,
                                                       const interval& support);

struct target_check {
  double mass = 0.0;        ///< int p
  double drift_mean = 0.0;  ///< int b p
  double min_coeff = 0.0;   ///< min of a over the check grid
};

/// Evaluates the measure's invariants on a grid of interior points.
[[nodiscard]] target_check check_target(const target_measure& target, std::size_t grid_points = 200);

/// Interior grid of n points avoiding the outer 1e-3 tail mass (or a
/// proportional margin on bounded supports).
[[nodiscard]] std::vector<double> interior_grid(const target_measure& target, std::size_t n);

}  // namespace chaoskit::stein
