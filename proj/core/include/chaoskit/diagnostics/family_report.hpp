#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaoskit/diagnostics/classifier.hpp"
#include "chaoskit/diagnostics/kernel_family.hpp"
#include "chaoskit/diagnostics/stein_residual.hpp"

namespace chaoskit::diagnostics {

struct member_record {
  unsigned m = 0;
  std::size_t dim = 0;
  double ef2 = 0.0;
  double ef3 = 0.0;
  double ef4 = 0.0;
  std::vector<double> contraction_norms;      ///< ||f (x)~_p f||, p = 1 .. n-1
  std::vector<double> raw_contraction_norms;  ///< ||f (x)_p f||
  double stein_residual_l2 = 0.0;             ///< level decomposition
  double stein_residual_l2_subtraction = 0.0; ///< chaos subtraction
  std::vector<level_term> stein_residual_levels;
  std::optional<mc_estimate> stein_residual_l2_mc;
  double prop24_gap = 0.0;
  std::optional<mc_estimate> prop24_gap_mc;
  std::optional<double> gamma_kernel_gap;  ///< n even and beta != 0
  std::optional<double> lemma_l11_gap;     ///< n even
  std::optional<double> lemma_l2;          ///< alpha admissible
};

struct trend_ratio {
  std::string quantity;
  unsigned m = 0;
  double ratio = 0.0;  ///< value(m) / value(2m)
};

struct diagnostics_report {
  std::string family;
  unsigned order = 0;
  std::string target;
  poly_coeff coeff;
  std::size_t mc_samples = 0;
  std::uint64_t seed = 0;
  std::vector<member_record> members;
  std::vector<trend_ratio> trends;
  classifier_result classifier;
};

struct family_options {
  std::size_t mc_samples = 100000;  ///< 0 skips the Monte Carlo columns
  std::uint64_t seed = 0;
};

/// Exact per-member diagnostics plus Monte Carlo cross-checks. Member i
/// samples with seed (seed, i) mixed through a seed_seq.
[[nodiscard]] member_record diagnose_member(const symmetric_kernel& f, unsigned m, const poly_coeff& coeff,
                                            std::size_t mc_samples, std::uint64_t seed);

[[nodiscard]] diagnostics_report run_family_diagnostics(const kernel_family& family, const std::vector<unsigned>& ms,
                                                        const std::string& target_name, const poly_coeff& coeff,
                                                        const family_options& opts);

}  // namespace chaoskit::diagnostics
