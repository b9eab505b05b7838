#include "chaoskit/diagnostics/chaos_moments.hpp"

#include <cmath>

#include "chaoskit/error.hpp"
#include "chaoskit/gaussian/contraction.hpp"
#include "chaoskit/gaussian/multi_index.hpp"
#include "chaoskit/stein/moments.hpp"

namespace chaoskit::diagnostics {

using gaussian::binomial;
using gaussian::factorial;

double moment2(const symmetric_kernel& f) { return factorial(f.order()) * f.norm_squared(); }

double moment3(const symmetric_kernel& f) {
  const unsigned n = f.order();
  if (n % 2 != 0) return 0.0;
  const double r = factorial(n) / factorial(n / 2);
  return r * r * r * inner(f, gaussian::contract_symmetrized(f, f, n / 2));
}

double moment4_weight(unsigned n, unsigned p) {
  const double a = binomial(n - 1, p - 1);
  const double b = binomial(n, p);
  return 3.0 * n * factorial(p - 1) * a * a * factorial(p) * b * b * factorial(2 * n - 2 * p);
}

double moment4(const symmetric_kernel& f) {
  const unsigned n = f.order();
  const double m2 = moment2(f);
  double sum = 3.0 * m2 * m2;
  for (unsigned p = 1; p < n; ++p) {
    sum += moment4_weight(n, p) * gaussian::contract_symmetrized(f, f, p).norm_squared();
  }
  return sum;
}

std::vector<double> sym_contraction_norms(const symmetric_kernel& f) {
  std::vector<double> out;
  for (unsigned p = 1; p < f.order(); ++p) out.push_back(gaussian::contract_symmetrized(f, f, p).norm());
  return out;
}

std::vector<double> contraction_norms(const symmetric_kernel& f) {
  std::vector<double> out;
  for (unsigned p = 1; p < f.order(); ++p) out.push_back(std::sqrt(gaussian::contraction_norm_squared(f, f, p)));
  return out;
}

double c_n(unsigned n) {
  if (n % 2 != 0) throw validation_error("c_n needs an even chaos order, got " + std::to_string(n));
  const double h = factorial(n / 2);
  const double full = factorial(n);
  return h * h * h / (full * full);
}

double lemma_l2_combination(const symmetric_kernel& f, const poly_coeff& coeff) {
  stein::require_admissible_alpha(coeff.alpha);
  const double m2 = moment2(f);
  const double m3 = moment3(f);
  const double m4 = moment4(f);
  return m4 - 1.5 * (coeff.alpha * m4 + coeff.beta * m3 + coeff.gamma * m2);
}

double gamma_kernel_gap(const symmetric_kernel& f, double lambda) {
  const unsigned n = f.order();
  if (n % 2 != 0) throw validation_error("gamma_kernel_gap needs an even chaos order");
  if (!(lambda != 0.0 && std::isfinite(lambda))) throw validation_error("gamma_kernel_gap: lambda must be non-zero");
  auto diff = (2.0 / lambda) * c_n(n) * f;
  diff -= gaussian::contract_symmetrized(f, f, n / 2);
  return diff.norm();
}

double lemma_l11_gap(const symmetric_kernel& f, const poly_coeff& coeff) {
  const unsigned n = f.order();
  if (n % 2 != 0) throw validation_error("lemma_l11_gap needs an even chaos order");
  if (std::abs(coeff.alpha - 1.0) < 1e-12) throw excluded_alpha_error("lemma_l11_gap: alpha = 1 is excluded");
  const double lhs = inner(f, gaussian::contract_symmetrized(f, f, n / 2));
  return std::abs(lhs - coeff.beta / (1.0 - coeff.alpha) * c_n(n) * f.norm_squared());
}

}  // namespace chaoskit::diagnostics
