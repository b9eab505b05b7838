#pragma once

#include <cstddef>
#include <map>

#include "chaoskit/gaussian/multi_index.hpp"
#include "chaoskit/gaussian/symmetric_kernel.hpp"

namespace chaoskit::gaussian {

/// General (not necessarily symmetric) sparse tensor in H^{(x)n}, keyed by
/// ordered multi-index. Contractions return this type before symmetrization.
class sparse_tensor {
 public:
  using entry_map = std::map<multi_index, double>;

  sparse_tensor(std::size_t dim, unsigned order);

  /// Every ordering of every orbit of f, as an ordered tensor.
  static sparse_tensor expand(const symmetric_kernel& f);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] unsigned order() const noexcept { return order_; }
  [[nodiscard]] const entry_map& entries() const noexcept { return entries_; }

  [[nodiscard]] double at(const multi_index& idx) const;

  /// Accumulates; throws validation_error for wrong length or out-of-range entries.
  void add(const multi_index& idx, double value);

  [[nodiscard]] double norm_squared() const noexcept;

 private:
  std::size_t dim_;
  unsigned order_;
  entry_map entries_;
};

/// Orbit average f~(i) = (1/n!) sum_sigma f(i_sigma). Idempotent and
/// norm non-increasing.
[[nodiscard]] symmetric_kernel symmetrize(const sparse_tensor& f);

}  // namespace chaoskit::gaussian
