#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chaoskit/stein/target_measure.hpp"

namespace chaoskit::diagnostics {

using stein::poly_coeff;

enum class verdict_kind { gaussian_only, gamma_only, outside_hypotheses, inconsistent };

[[nodiscard]] std::string_view to_string(verdict_kind k) noexcept;

struct classifier_verdict {
  verdict_kind kind = verdict_kind::outside_hypotheses;
  /// Parameters of the only Gamma family reachable (gamma_only).
  std::optional<double> lambda;
  std::optional<double> shape;
  std::string reason;
  /// Whether the given coefficient itself can be a chaos limit.
  bool target_reachable = false;
};

struct classifier_result {
  poly_coeff coeff;
  std::optional<double> c0;
  /// Closed-form discriminant -144 alpha/(2-3alpha) [beta^2/(1-alpha)^2 + 2 gamma/(2-alpha)].
  std::optional<double> delta;
  /// Discriminant of the quadratic in c divided by beta^2 (absent for beta = 0).
  std::optional<double> discriminant_exact;
  /// Real roots of 3b^2 c^2 - 12b^2/(1-a) c - (8 C0 - 12 b^2/(1-a)) = 0.
  std::vector<double> roots;
  std::vector<std::pair<unsigned, double>> c_n_table;  ///< n = 2, 4, 6, 8
  /// Every even moment is finite (alpha <= 0), as the sign argument for C0 assumes.
  bool c0_sign_argument_applies = false;
  classifier_verdict verdict;
};

[[nodiscard]] double c0_value(const poly_coeff& c);
[[nodiscard]] double delta_value(const poly_coeff& c);

/// Never throws on excluded alpha: that case yields outside_hypotheses with
/// the alpha-dependent quantities left empty.
[[nodiscard]] classifier_result classify(const poly_coeff& c);

}  // namespace chaoskit::diagnostics
