#pragma once

#include <span>

namespace chaoskit::gaussian {

/// Hermite polynomial with leading coefficient 1/n!, so that
/// I_n(e^{(x)n}) = n! H_n(B(e)). Uses (k+1)H_{k+1} = xH_k - H_{k-1}.
[[nodiscard]] double hermite(unsigned n, double x) noexcept;

/// Fills out[k] = H_k(x) for k = 0 .. out.size()-1.
void hermite_table(double x, std::span<double> out) noexcept;

}  // namespace chaoskit::gaussian
