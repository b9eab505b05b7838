#pragma once

#include <cstddef>
#include <map>
#include <span>

#include "chaoskit/gaussian/multi_index.hpp"

namespace chaoskit::gaussian {

/// Element of the symmetric tensor power H^{(.)n} with H = R^d.
///
/// Storage is sparse and keyed by canonical (sorted) multi-index; the stored
/// number is the tensor entry shared by every ordering in that orbit. Norms
/// account for orbit multiplicity, so dense d^n tensors are never built.
class symmetric_kernel {
 public:
  using entry_map = std::map<multi_index, double>;

  symmetric_kernel(std::size_t dim, unsigned order);

  /// Order-0 kernel holding a constant.
  static symmetric_kernel scalar(std::size_t dim, double value);

  /// weight * sym(e_{i1} (x) ... (x) e_{in}) for an arbitrary ordering of idx.
  static symmetric_kernel elementary(std::size_t dim, multi_index idx, double weight = 1.0);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] unsigned order() const noexcept { return order_; }
  [[nodiscard]] const entry_map& entries() const noexcept { return entries_; }
  [[nodiscard]] std::size_t nnz() const noexcept { return entries_.size(); }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }

  /// Tensor entry at any ordering of idx.
  [[nodiscard]] double at(std::span<const index_t> idx) const;

  /// Accumulates into the canonical entry. Throws validation_error when the
  /// index is not canonical, has the wrong length, or is out of range.
  void add(const multi_index& canonical_idx, double value);

  /// Sum over orbits of multiplicity * entry^2.
  [[nodiscard]] double norm_squared() const noexcept;
  [[nodiscard]] double norm() const noexcept;

  /// The order n-1 kernel f(., i). Throws for order 0.
  [[nodiscard]] symmetric_kernel partial(index_t i) const;

  /// Drops entries with |value| <= tol.
  [[nodiscard]] symmetric_kernel pruned(double tol = 0.0) const;

  symmetric_kernel& operator+=(const symmetric_kernel& other);
  symmetric_kernel& operator-=(const symmetric_kernel& other);
  symmetric_kernel& operator*=(double c);

  friend symmetric_kernel operator+(symmetric_kernel a, const symmetric_kernel& b) { return a += b; }
  friend symmetric_kernel operator-(symmetric_kernel a, const symmetric_kernel& b) { return a -= b; }
  friend symmetric_kernel operator*(symmetric_kernel a, double c) { return a *= c; }
  friend symmetric_kernel operator*(double c, symmetric_kernel a) { return a *= c; }

  friend bool operator==(const symmetric_kernel&, const symmetric_kernel&) = default;

 private:
  void require_compatible(const symmetric_kernel& other) const;

  std::size_t dim_;
  unsigned order_;
  entry_map entries_;
};

/// <f, g> in H^{(x)n}; zero when the orders differ.
[[nodiscard]] double inner(const symmetric_kernel& f, const symmetric_kernel& g);

/// Pathwise value of I_n(f) at the Gaussian realization x = (B(e_1), ..., B(e_d)),
/// using I_n(sym(e_j^{(x)k_j} ...)) = prod_j k_j! H_{k_j}(x_j).
[[nodiscard]] double eval_multiple_integral(const symmetric_kernel& f, std::span<const double> x);

}  // namespace chaoskit::gaussian
