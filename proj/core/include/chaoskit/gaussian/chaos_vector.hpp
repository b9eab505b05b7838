#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "chaoskit/gaussian/symmetric_kernel.hpp"

namespace chaoskit::gaussian {

/// Finite Wiener-chaos expansion F = sum_k I_k(g_k). Level 0 holds E[F].
class chaos_vector {
 public:
  using level_map = std::map<unsigned, symmetric_kernel>;

  explicit chaos_vector(std::size_t dim);

  /// I_n(f).
  static chaos_vector single(symmetric_kernel f);
  static chaos_vector constant(std::size_t dim, double value);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const level_map& levels() const noexcept { return levels_; }

  /// Kernel at level k, or the zero kernel of order k.
  [[nodiscard]] symmetric_kernel level(unsigned k) const;
  [[nodiscard]] bool has_level(unsigned k) const { return levels_.contains(k); }
  [[nodiscard]] unsigned max_level() const noexcept;

  [[nodiscard]] double expectation() const;

  /// E[F^2] = sum_k k! ||g_k||^2.
  [[nodiscard]] double second_moment() const;

  [[nodiscard]] double evaluate(std::span<const double> x) const;

  /// Accumulates a kernel into the level equal to its order.
  void add(const symmetric_kernel& f);

  chaos_vector& operator+=(const chaos_vector& other);
  chaos_vector& operator-=(const chaos_vector& other);
  chaos_vector& operator*=(double c);

  friend chaos_vector operator+(chaos_vector a, const chaos_vector& b) { return a += b; }
  friend chaos_vector operator-(chaos_vector a, const chaos_vector& b) { return a -= b; }
  friend chaos_vector operator*(chaos_vector a, double c) { return a *= c; }
  friend chaos_vector operator*(double c, chaos_vector a) { return a *= c; }

 private:
  std::size_t dim_;
  level_map levels_;
};

/// E[F G] by the isometry: sum_k k! <f_k, g_k>.
[[nodiscard]] double isometry_inner(const chaos_vector& f, const chaos_vector& g);

/// Chaos expansion of the pointwise product, via
/// I_n(f) I_m(g) = sum_r r! C(n,r) C(m,r) I_{n+m-2r}(f (x)~_r g).
[[nodiscard]] chaos_vector chaos_product(const chaos_vector& f, const chaos_vector& g);

/// Chaos expansion of <DF, DG>_H. Level pairs contribute
/// nm sum_r r! C(n-1,r) C(m-1,r) I_{n+m-2-2r}(f (x)~_{r+1} g).
[[nodiscard]] chaos_vector malliavin_inner(const chaos_vector& f, const chaos_vector& g);

/// (-L)^{-1} F: level k >= 1 scaled by 1/k. Throws validation_error when
/// F has a non-zero level-0 component.
[[nodiscard]] chaos_vector ou_inverse(const chaos_vector& f);

/// The partial kernels f(., i) for i in [0, d): DI_n(f) = n sum_i I_{n-1}(f(., i)) e_i.
[[nodiscard]] std::vector<symmetric_kernel> malliavin_gradient_kernels(const symmetric_kernel& f);

}  // namespace chaoskit::gaussian
