#include "chaoskit/gaussian/hermite.hpp"

namespace chaoskit::gaussian {

double hermite(unsigned n, double x) noexcept {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (unsigned k = 1; k < n; ++k) {
    const double next = (x * cur - prev) / static_cast<double>(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

void hermite_table(double x, std::span<double> out) noexcept {
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = x;
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    out[k + 1] = (x * out[k] - out[k - 1]) / static_cast<double>(k + 1);
  }
}

}  // namespace chaoskit::gaussian
