#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chaoskit/gaussian/symmetric_kernel.hpp"

namespace chaoskit::diagnostics {

using gaussian::symmetric_kernel;

/// Indexed sequence m -> f_m of kernels sharing one chaos order.
class kernel_family {
 public:
  /// f_m = (2m)^{-1/2} sum_{i<m} e_i (x) e_i on R^m.
  static kernel_family gaussian_clt();
  /// f = scale * sum_{i<k} e_i (x) e_i for every m; I_2(f) is a centered
  /// Gamma(k/2, 1/(2 scale)) variable.
  static kernel_family gamma_fixed(unsigned k, double scale = 1.0);
  /// Member m is list[m-1]; members share the order, dims may grow.
  static kernel_family explicit_list(std::vector<symmetric_kernel> members, std::string name = "explicit");

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] unsigned order() const noexcept { return order_; }
  /// Throws validation_error when m is out of range.
  [[nodiscard]] symmetric_kernel member(unsigned m) const;
  /// Largest valid m, or 0 for unbounded generators.
  [[nodiscard]] unsigned size() const noexcept { return size_; }

 private:
  std::string name_;
  unsigned order_ = 0;
  unsigned size_ = 0;
  std::function<symmetric_kernel(unsigned)> gen_;
};

}  // namespace chaoskit::diagnostics
