#include "chaoskit/diagnostics/classifier.hpp"

#include <cmath>

#include "chaoskit/diagnostics/chaos_moments.hpp"
#include "chaoskit/stein/moments.hpp"

namespace chaoskit::diagnostics {

std::string_view to_string(verdict_kind k) noexcept {
  switch (k) {
    case verdict_kind::gaussian_only:
      return "GaussianOnly";
    case verdict_kind::gamma_only:
      return "GammaOnly";
    case verdict_kind::outside_hypotheses:
      return "OutsideHypotheses";
    case verdict_kind::inconsistent:
      return "Inconsistent";
  }
  return "?";
}

double c0_value(const poly_coeff& c) {
  stein::require_admissible_alpha(c.alpha);
  const double a = c.alpha;
  return 1.5 * a *
         (-4.0 * c.gamma / ((2.0 - a) * (2.0 - 3.0 * a)) - 3.0 * c.beta * c.beta / ((1.0 - a) * (2.0 - 3.0 * a)));
}

double delta_value(const poly_coeff& c) {
  stein::require_admissible_alpha(c.alpha);
  const double a = c.alpha;
  return -144.0 * a / (2.0 - 3.0 * a) * (c.beta * c.beta / ((1.0 - a) * (1.0 - a)) + 2.0 * c.gamma / (2.0 - a));
}

classifier_result classify(const poly_coeff& c) {
  classifier_result r;
  r.coeff = c;
  for (unsigned n = 2; n <= 8; n += 2) r.c_n_table.emplace_back(n, c_n(n));
  r.c0_sign_argument_applies = c.alpha <= 0.0;
  auto& v = r.verdict;

  if (stein::is_excluded_alpha(c.alpha)) {
    v.kind = verdict_kind::outside_hypotheses;
    v.reason = "excluded alpha: the moment formulas need alpha outside {1, 2, 2/3}";
    return r;
  }
  r.c0 = c0_value(c);
  r.delta = delta_value(c);
  if (c.beta != 0.0) {
    const double b2 = c.beta * c.beta;
    const double A = 3.0 * b2;
    const double B = -12.0 * b2 / (1.0 - c.alpha);
    const double C = -(8.0 * *r.c0 - 12.0 * b2 / (1.0 - c.alpha));
    const double disc = B * B - 4.0 * A * C;
    r.discriminant_exact = disc / b2;
    // Relative slack: the Gamma case is an exact double root.
    if (disc >= -1e-12 * B * B) {
      const double s = std::sqrt(std::max(disc, 0.0));
      r.roots = {(-B - s) / (2.0 * A), (-B + s) / (2.0 * A)};
    }
  }

  const double variance = c.gamma / (2.0 - c.alpha);
  if (!(variance > 0.0)) {
    v.kind = verdict_kind::inconsistent;
    v.reason = "gamma/(2-alpha) must be a positive variance";
    return r;
  }
  if (c.beta == 0.0) {
    v.kind = verdict_kind::gaussian_only;
    v.target_reachable = c.alpha == 0.0;
    v.reason = v.target_reachable ? "alpha = 0: centered normal target"
                                  : "C0 != 0: only a centered normal law can be a chaos limit";
    return r;
  }
  if (c.alpha > 0.0 && c.alpha <= 2.0 / 3.0) {
    v.kind = verdict_kind::outside_hypotheses;
    v.reason = "beta != 0 with alpha in (0, 2/3]: the discriminant argument does not apply";
    return r;
  }
  v.kind = verdict_kind::gamma_only;
  v.lambda = 2.0 / c.beta;
  v.shape = c.gamma * *v.lambda * *v.lambda / 2.0;
  v.target_reachable = c.alpha == 0.0;
  v.reason = v.target_reachable ? "alpha = 0: centered Gamma target"
                                : "alpha != 0: only a centered Gamma law can be a chaos limit";
  return r;
}

}  // namespace chaoskit::diagnostics
