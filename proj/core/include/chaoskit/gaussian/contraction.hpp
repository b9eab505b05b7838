#pragma once

#include "chaoskit/gaussian/sparse_tensor.hpp"
#include "chaoskit/gaussian/symmetric_kernel.hpp"

namespace chaoskit::gaussian {

/// f (x)_r g: pairs r arguments of f with r arguments of g and sums over the
/// shared basis indices. The result has order n+m-2r and is not symmetrized;
/// contract(f, g, 0) is the tensor product and contract(f, f, n) is ||f||^2.
/// Throws validation_error when r > min(n, m) or the dims differ.
[[nodiscard]] sparse_tensor contract(const symmetric_kernel& f, const symmetric_kernel& g, unsigned r);

/// symmetrize(contract(f, g, r)) without materializing ordered entries.
[[nodiscard]] symmetric_kernel contract_symmetrized(const symmetric_kernel& f, const symmetric_kernel& g,
                                                    unsigned r);

/// ||f (x)_r g||^2 of the unsymmetrized contraction.
[[nodiscard]] double contraction_norm_squared(const symmetric_kernel& f, const symmetric_kernel& g, unsigned r);

}  // namespace chaoskit::gaussian
