#pragma once

#include <cstddef>
#include <functional>

namespace chaoskit::stein {

using real_fn = std::function<double(double)>;

struct quadrature_options {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  std::size_t max_intervals = 2000;
};

struct quadrature_result {
  double value = 0.0;
  double abs_error = 0.0;
};

/// Adaptive Gauss-Kronrod integral of f over (lower, upper). Infinite
/// endpoints are mapped to a finite t-range through x = tan(t). Throws
/// numeric_error when the requested tolerance cannot be met.
[[nodiscard]] quadrature_result integrate(const real_fn& f, double lower, double upper,
                                          const quadrature_options& opts = {});

/// Single 21-point Gauss-Kronrod panel over a finite interval. Smooth in
/// its endpoints, which finite-difference stencils rely on.
[[nodiscard]] double integrate_panel(const real_fn& f, double lower, double upper);

}  // namespace chaoskit::stein
