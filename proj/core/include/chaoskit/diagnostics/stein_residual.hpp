#pragma once

#include <cstdint>
#include <vector>

#include "chaoskit/gaussian/chaos_vector.hpp"
#include "chaoskit/gaussian/symmetric_kernel.hpp"
#include "chaoskit/stein/target_measure.hpp"

namespace chaoskit::diagnostics {

using gaussian::chaos_vector;
using gaussian::symmetric_kernel;
using stein::poly_coeff;

/// a(F) = alpha F^2 + beta F + gamma as a chaos expansion.
[[nodiscard]] chaos_vector coeff_of_chaos(const chaos_vector& F, const poly_coeff& coeff);

struct level_term {
  unsigned k = 0;
  double value = 0.0;  ///< k! times the squared norm of the level-k kernel
};

struct chaos_residual {
  double value = 0.0;             ///< sum over levels
  std::vector<level_term> levels; ///< per-level contributions, ascending k
};

/// E[(1/2 a(F) - n^{-1}||DF||^2)^2] level by level: for even k <= 2n-2 the
/// level kernel is 1/2 g_k - n (n-1-k/2)! C(n-1,k/2)^2 f (x)~_{n-k/2} f,
/// every other level carries 1/2 g_k alone.
[[nodiscard]] chaos_residual stein_residual_chaos(const symmetric_kernel& f, const poly_coeff& coeff);

/// Same quantity by subtracting malliavin_inner(F, F)/n from a(F)/2 as chaos
/// vectors and applying the isometry.
[[nodiscard]] chaos_residual stein_residual_subtraction(const symmetric_kernel& f, const poly_coeff& coeff);

struct mc_estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Pathwise values of F and ||DF||^2 over sample_gaussian(dim, seed, samples).
struct pathwise_sampler {
  explicit pathwise_sampler(const symmetric_kernel& f);

  [[nodiscard]] double value(std::span<const double> x) const;
  /// ||DF||^2 = n^2 sum_i I_{n-1}(f(., i))^2.
  [[nodiscard]] double gradient_norm_squared(std::span<const double> x) const;

 private:
  symmetric_kernel f_;
  std::vector<symmetric_kernel> partials_;
};

/// Monte Carlo mean of (1/2 a(F) - n^{-1}||DF||^2)^2.
[[nodiscard]] mc_estimate stein_residual_mc(const symmetric_kernel& f, const poly_coeff& coeff, std::size_t samples,
                                            std::uint64_t seed);

/// |1/4 E a(F)^2 - n^{-2} E ||DF||^4| by chaos arithmetic.
[[nodiscard]] double prop24_gap_chaos(const symmetric_kernel& f, const poly_coeff& coeff);

/// Monte Carlo version; the mean is the signed difference, stderr of the
/// paired per-sample difference.
[[nodiscard]] mc_estimate prop24_gap_mc(const symmetric_kernel& f, const poly_coeff& coeff, std::size_t samples,
                                        std::uint64_t seed);

}  // namespace chaoskit::diagnostics
