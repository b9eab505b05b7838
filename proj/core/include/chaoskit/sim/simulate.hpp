#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "chaoskit/sim/empirical.hpp"
#include "chaoskit/stein/target_measure.hpp"

namespace chaoskit::sim {

struct sim_config {
  double dt = 1e-3;
  std::size_t burn_in = 100000;
  std::size_t samples = 100000;
  std::size_t thinning = 10;
  std::uint64_t seed = 0;
  double boundary_epsilon = 1e-9;
  /// Starting point; NaN means the drift root.
  double start = std::numeric_limits<double>::quiet_NaN();
};

/// Throws validation_error naming the offending field.
void validate(const sim_config& cfg, const stein::target_measure& target);

struct sim_result {
  empirical_distribution distribution;
  std::vector<double> chain;  ///< samples in chain order
  std::size_t steps = 0;
  std::size_t clamped = 0;
  [[nodiscard]] double clamp_fraction() const { return steps ? static_cast<double>(clamped) / steps : 0.0; }
  /// Clamping frequency above 0.1%.
  [[nodiscard]] bool clamp_flag() const { return clamp_fraction() > 1e-3; }
};

/// Euler-Maruyama for dX = b(X)dt + sqrt(a(X))dW with projection into
/// [l + eps, u - eps] after every step. Throws numeric_error when the state
/// leaves the reals or more than half of the steps need clamping.
[[nodiscard]] sim_result simulate(const stein::target_measure& target, const sim_config& cfg);

}  // namespace chaoskit::sim
