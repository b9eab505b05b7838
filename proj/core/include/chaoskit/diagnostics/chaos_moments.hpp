#pragma once

#include <vector>

#include "chaoskit/gaussian/symmetric_kernel.hpp"
#include "chaoskit/stein/target_measure.hpp"

namespace chaoskit::diagnostics {

using gaussian::symmetric_kernel;
using stein::poly_coeff;

/// E F^2 = n! ||f||^2 for F = I_n(f).
[[nodiscard]] double moment2(const symmetric_kernel& f);

/// E F^3: n!^3/(n/2)!^3 <f, f (x)~_{n/2} f> for even n, 0 for odd n.
[[nodiscard]] double moment3(const symmetric_kernel& f);

/// E F^4 = 3(E F^2)^2 + 3n sum_p (p-1)! C(n-1,p-1)^2 p! C(n,p)^2 (2n-2p)! ||f (x)~_p f||^2.
[[nodiscard]] double moment4(const symmetric_kernel& f);

/// Weight of ||f (x)~_p f||^2 in the fourth moment.
[[nodiscard]] double moment4_weight(unsigned n, unsigned p);

/// ||f (x)~_p f|| for p = 1 .. n-1 (index 0 is p = 1).
[[nodiscard]] std::vector<double> sym_contraction_norms(const symmetric_kernel& f);

/// ||f (x)_p f|| of the plain contraction, p = 1 .. n-1.
[[nodiscard]] std::vector<double> contraction_norms(const symmetric_kernel& f);

/// (n/2)!^3 / n!^2 for even n; throws validation_error for odd n.
[[nodiscard]] double c_n(unsigned n);

/// E[F^4 - 3/2 a(F) F^2] from the exact moments. Throws
/// excluded_alpha_error for alpha in {1, 2, 2/3}.
[[nodiscard]] double lemma_l2_combination(const symmetric_kernel& f, const poly_coeff& coeff);

/// ||(2/lambda) c_n f - f (x)~_{n/2} f||; n must be even.
[[nodiscard]] double gamma_kernel_gap(const symmetric_kernel& f, double lambda);

/// |<f, f (x)~_{n/2} f> - beta/(1-alpha) c_n ||f||^2|; n even, alpha != 1.
[[nodiscard]] double lemma_l11_gap(const symmetric_kernel& f, const poly_coeff& coeff);

}  // namespace chaoskit::diagnostics
