#include "chaoskit/stein/target_measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chaoskit/error.hpp"

namespace chaoskit::stein {

namespace {

constexpr double invariant_tol = 1e-8;

// Root of a drift that is positive on (l, k) and negative on (k, u).
double find_drift_root(const real_fn& drift, const interval& s) {
  auto b = [&](double x) { return drift ? drift(x) : -x; };
  double lo = s.lower;
  double hi = s.upper;
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    double start = 0.0;
    if (std::isfinite(lo)) start = lo + 1.0;
    if (std::isfinite(hi)) start = hi - 1.0;
    double step = 1.0;
    lo = std::isfinite(s.lower) ? s.lower : start - step;
    while (!std::isfinite(s.lower) && b(lo) <= 0.0) {
      step *= 2.0;
      lo = start - step;
      if (step > 1e300) throw validation_error("drift has no sign change below the support");
    }
    step = 1.0;
    hi = std::isfinite(s.upper) ? s.upper : start + step;
    while (!std::isfinite(s.upper) && b(hi) >= 0.0) {
      step *= 2.0;
      hi = start + step;
      if (step > 1e300) throw validation_error("drift has no sign change above the support");
    }
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo) + std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (b(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

bool interval::bounded() const noexcept { return std::isfinite(lower) && std::isfinite(upper); }

diffusion_coefficient diffusion_coefficient::polynomial(poly_coeff c) {
  diffusion_coefficient out;
  out.poly_ = c;
  out.eval_ = [c](double x) { return c(x); };
  return out;
}

diffusion_coefficient diffusion_coefficient::numeric(real_fn evaluator) {
  if (!evaluator) throw validation_error("numeric diffusion coefficient needs an evaluator");
  diffusion_coefficient out;
  out.eval_ = std::move(evaluator);
  return out;
}

const poly_coeff& diffusion_coefficient::coefficients() const {
  if (!poly_) throw validation_error("diffusion coefficient is not a polynomial");
  return *poly_;
}

target_measure::target_measure(definition def) : def_(std::move(def)) {
  if (!def_.density) throw validation_error("target '" + def_.name + "' has no density");
  if (!(def_.support.lower < def_.support.upper)) throw validation_error("target support must satisfy l < u");
  drift_root_ = find_drift_root(def_.drift, def_.support);
  if (!def_.coeff) def_.coeff = coeff_from_density(def_.density, def_.drift, def_.support);
}

double target_measure::density(double x) const { return def_.support.contains(x) ? def_.density(x) : 0.0; }

double target_measure::cdf(double x) const {
  if (x <= def_.support.lower) return 0.0;
  if (x >= def_.support.upper) return 1.0;
  if (def_.cdf) return def_.cdf(x);
  return integrate(def_.density, def_.support.lower, x, {1e-12, 1e-10, 2000}).value;
}

double target_measure::quantile(double u) const {
  if (!def_.quantile) throw validation_error("target '" + def_.name + "' has no closed-form quantile");
  if (!(u > 0.0 && u < 1.0)) throw validation_error("quantile level must lie in (0, 1)");
  return def_.quantile(u);
}

double target_measure::expect(const real_fn& f, const quadrature_options& opts) const {
  const auto& s = def_.support;
  real_fn integrand = [&](double x) {
    const double p = def_.density(x);
    return p == 0.0 ? 0.0 : f(x) * p;
  };
  return integrate(integrand, s.lower, drift_root_, opts).value +
         integrate(integrand, drift_root_, s.upper, opts).value;
}

diffusion_coefficient coeff_from_density(const real_fn& density, const real_fn& drift, const interval& support) {
  if (!density) throw validation_error("coeff_from_density: missing density");
  real_fn b = drift ? drift : real_fn([](double x) { return -x; });
  const double root = find_drift_root(b, support);
  const quadrature_options tight{1e-13, 1e-11, 2000};

  auto mass_fn = [&](double x) { return density(x); };
  const double mass =
      integrate(mass_fn, support.lower, root, tight).value + integrate(mass_fn, root, support.upper, tight).value;
  if (std::abs(mass - 1.0) > invariant_tol) {
    throw validation_error("density is not normalized: integral = " + std::to_string(mass));
  }
  auto bp = [density, b](double x) {
    const double p = density(x);
    return p == 0.0 ? 0.0 : b(x) * p;
  };
  const double left = integrate(bp, support.lower, root, tight).value;
  const double right = integrate(bp, root, support.upper, tight).value;
  if (std::abs(left + right) > invariant_tol) {
    throw validation_error("drift is not centered under the density: int b p = " + std::to_string(left + right));
  }

  const interval s = support;
  auto evaluator = [density, bp, s, root, tight](double x) {
    const double p = density(x);
    if (p <= 0.0) throw numeric_error("diffusion coefficient evaluated where the density vanishes");
    // Integrate over the side away from the drift root: the two tails are
    // small and of opposite sign, so this avoids cancellation.
    const double num = x <= root ? integrate(bp, s.lower, x, tight).value : -integrate(bp, x, s.upper, tight).value;
    return 2.0 * num / p;
  };

  auto coeff = diffusion_coefficient::numeric(evaluator);
  // a > 0 on the interior: check a coarse grid spanning the support.
  const double lo = std::isfinite(s.lower) ? s.lower : root - 10.0;
  const double hi = std::isfinite(s.upper) ? s.upper : root + 10.0;
  for (int k = 1; k < 64; ++k) {
    const double x = lo + (hi - lo) * k / 64.0;
    if (density(x) <= 0.0) continue;
    if (!(coeff(x) > 0.0)) {
      throw validation_error("diffusion coefficient is not positive at x = " + std::to_string(x));
    }
  }
  return coeff;
}

std::vector<double> interior_grid(const target_measure& target, std::size_t n) {
  std::vector<double> out;
  out.reserve(n);
  const auto& s = target.support();
  for (std::size_t k = 0; k < n; ++k) {
    const double u = 1e-3 + (1.0 - 2e-3) * (n == 1 ? 0.5 : static_cast<double>(k) / static_cast<double>(n - 1));
    double x = 0.0;
    if (target.has_quantile()) {
      x = target.quantile(u);
    } else {
      const double lo = std::isfinite(s.lower) ? s.lower : target.drift_root() - 8.0 * target.scale();
      const double hi = std::isfinite(s.upper) ? s.upper : target.drift_root() + 8.0 * target.scale();
      x = lo + (hi - lo) * u;
    }
    out.push_back(x);
  }
  return out;
}

target_check check_target(const target_measure& target, std::size_t grid_points) {
  target_check out;
  const quadrature_options tight{1e-13, 1e-11, 2000};
  out.mass = target.expect([](double) { return 1.0; }, tight);
  out.drift_mean = target.expect([&](double x) { return target.drift(x); }, tight);
  out.min_coeff = infinity;
  for (double x : interior_grid(target, grid_points)) out.min_coeff = std::min(out.min_coeff, target.a(x));
  return out;
}

}  // namespace chaoskit::stein
