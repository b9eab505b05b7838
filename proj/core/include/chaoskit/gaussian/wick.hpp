#pragma once

#include <span>

#include "chaoskit/gaussian/chaos_vector.hpp"

namespace chaoskit::gaussian {

/// Largest total number of chaos factors wick_moment will multiply out.
inline constexpr unsigned wick_factor_guard = 12;

/// Exact mixed moment E[prod_i F_i^{p_i}], obtained by expanding the product
/// with the product formula and reading the constant term through the
/// isometry. Used as ground truth for every moment identity.
/// Throws guard_exceeded_error when sum p_i > wick_factor_guard and
/// validation_error for mismatched inputs.
[[nodiscard]] double wick_moment(std::span<const chaos_vector> factors, std::span<const unsigned> powers);

/// Convenience overload for E[F^p].
[[nodiscard]] double wick_moment(const chaos_vector& f, unsigned power);

}  // namespace chaoskit::gaussian
