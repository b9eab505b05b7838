#include "chaoskit/stein/moments.hpp"

#include <cmath>
#include <string>

#include "chaoskit/error.hpp"

namespace chaoskit::stein {

namespace {
constexpr double alpha_tol = 1e-12;
}

bool is_excluded_alpha(double alpha) noexcept {
  return std::abs(alpha - 1.0) < alpha_tol || std::abs(alpha - 2.0) < alpha_tol ||
         std::abs(alpha - 2.0 / 3.0) < alpha_tol;
}

void require_admissible_alpha(double alpha) {
  if (is_excluded_alpha(alpha)) {
    throw excluded_alpha_error("alpha = " + std::to_string(alpha) + " is excluded (alpha must avoid 1, 2 and 2/3)");
  }
}

poly_moment_set poly_moments(const poly_coeff& c) {
  require_admissible_alpha(c.alpha);
  const double a = c.alpha;
  poly_moment_set out;
  out.m2 = c.gamma / (2.0 - a);
  out.m3 = c.beta * c.gamma / ((1.0 - a) * (2.0 - a));
  out.m4 = 3.0 * c.gamma * (c.beta * c.beta / (1.0 - a) + c.gamma) / ((2.0 - a) * (2.0 - 3.0 * a));
  return out;
}

double moment_recursion(const poly_coeff& c, int j, const std::vector<double>& lower) {
  if (j < 1) throw validation_error("moment order must be >= 1");
  if (lower.size() < static_cast<std::size_t>(j)) {
    throw validation_error("moment_recursion needs E X^0 .. E X^" + std::to_string(j - 1));
  }
  const double lead = 1.0 - (j - 1) * c.alpha / 2.0;
  if (std::abs(lead) < alpha_tol) {
    throw validation_error("moment recursion of order " + std::to_string(j) + " has a vanishing leading coefficient");
  }
  if (lead < 0.0) {
    throw validation_error("moment of order " + std::to_string(j) + " is infinite for alpha = " +
                           std::to_string(c.alpha));
  }
  const double below = j >= 2 ? lower[j - 2] : 0.0;
  return (j - 1) / 2.0 * (c.beta * lower[j - 1] + c.gamma * below) / lead;
}

std::vector<double> moment_sequence(const poly_coeff& c, int max_order) {
  std::vector<double> m{1.0};
  for (int j = 1; j <= max_order; ++j) m.push_back(moment_recursion(c, j, m));
  return m;
}

test_function test_function::monomial(int k) {
  if (k < 0) throw validation_error("monomial degree must be >= 0");
  test_function t;
  t.name = k == 1 ? "x" : "x^" + std::to_string(k);
  t.h = [k](double x) { return std::pow(x, k); };
  t.dh = [k](double x) { return k == 0 ? 0.0 : k * std::pow(x, k - 1); };
  t.growth = k;
  t.deriv_growth = k > 0 ? k - 1 : 0;
  return t;
}

test_function test_function::sine() {
  return {"sin", [](double x) { return std::sin(x); }, [](double x) { return std::cos(x); }, 0.0, 0.0};
}

std::vector<test_function> test_function::dictionary() {
  return {monomial(1), monomial(2), monomial(3), sine()};
}

double coeff_growth(const target_measure& target) {
  if (!target.coeff().is_polynomial()) return 2.0;
  const auto& c = target.coeff().coefficients();
  if (c.alpha != 0.0) return 2.0;
  return c.beta != 0.0 ? 1.0 : 0.0;
}

double stein_identity_residual(const target_measure& target, const test_function& h) {
  // E|X|^k is finite iff k < moment_limit; b(x) = -x grows linearly.
  const double need = std::max(h.growth + 1.0, h.deriv_growth + coeff_growth(target));
  if (!(need < target.moment_limit())) {
    throw validation_error("test function '" + h.name + "' is not integrable against target '" + target.name() +
                           "' (needs moments of order " + std::to_string(need) + ")");
  }
  const quadrature_options opts{1e-12, 1e-10, 4000};
  // Kept as two integrals: on each side of the drift root the combined
  // integrand integrates to h(root) a(root) p(root) / 2, often exactly zero.
  const double diffusion = target.expect([&](double x) { return 0.5 * target.a(x) * h.dh(x); }, opts);
  const double drift = target.expect([&](double x) { return target.drift(x) * h.h(x); }, opts);
  return diffusion + drift;
}

}  // namespace chaoskit::stein
