#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chaoskit/stein/moments.hpp"
#include "chaoskit/stein/target_measure.hpp"

namespace chaoskit::sim {

/// Sorted sample set.
class empirical_distribution {
 public:
  /// Sorts the values; throws validation_error for fewer than 2 samples or
  /// non-finite values.
  explicit empirical_distribution(std::vector<double> values);

  [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
  [[nodiscard]] std::size_t count() const noexcept { return values_.size(); }
  [[nodiscard]] double cdf(double x) const;
  [[nodiscard]] double mean() const;

 private:
  std::vector<double> values_;
};

/// sup_x |F_hat(x) - F(x)|, checked on both sides of every sample point.
[[nodiscard]] double ks_distance(const empirical_distribution& e, const stein::target_measure& target);

/// Two-sample sup distance between empirical CDFs.
[[nodiscard]] double ks_distance(const empirical_distribution& a, const empirical_distribution& b);

/// int_0^1 |Q_a(u) - Q_b(u)| du for the piecewise-constant quantile functions.
[[nodiscard]] double wasserstein1_distance(const empirical_distribution& a, const empirical_distribution& b);

struct residual_estimate {
  double mean = 0.0;
  double std_error = 0.0;
  /// |mean| / std_error, infinite when the error vanishes with a non-zero mean.
  [[nodiscard]] double z() const;
};

/// Sample mean of 1/2 a(Y) h'(Y) + b(Y) h(Y) and its standard error.
[[nodiscard]] residual_estimate stein_residual_empirical(const empirical_distribution& e,
                                                         const stein::target_measure& target,
                                                         const stein::test_function& h);

/// Same, with the standard error taken as the larger of the iid and
/// batch-means estimates (correlated chains).
[[nodiscard]] residual_estimate stein_residual_empirical_batched(const empirical_distribution& e,
                                                                 std::span<const double> chain_order,
                                                                 const stein::target_measure& target,
                                                                 const stein::test_function& h,
                                                                 std::size_t batches = 50);

/// Exact draws by inverse CDF; needs a closed-form quantile.
[[nodiscard]] empirical_distribution sample_exact(const stein::target_measure& target, std::size_t count,
                                                  std::uint64_t seed);

}  // namespace chaoskit::sim
