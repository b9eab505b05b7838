#include "chaoskit/gaussian/multi_index.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace chaoskit::gaussian {

bool is_canonical(std::span<const index_t> idx, std::size_t dim) noexcept {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= dim) return false;
    if (k > 0 && idx[k - 1] > idx[k]) return false;
  }
  return true;
}

multi_index canonical(multi_index idx) {
  std::sort(idx.begin(), idx.end());
  return idx;
}

occupation occupation_of(std::span<const index_t> sorted) {
  occupation occ;
  for (index_t v : sorted) {
    if (!occ.empty() && occ.back().first == v) {
      ++occ.back().second;
    } else {
      occ.emplace_back(v, 1U);
    }
  }
  return occ;
}

double factorial(unsigned n) {
  static const auto table = [] {
    std::array<double, 171> t{};
    t[0] = 1.0;
    for (std::size_t k = 1; k < t.size(); ++k) t[k] = t[k - 1] * static_cast<double>(k);
    return t;
  }();
  return n < table.size() ? table[n] : HUGE_VAL;
}

double binomial(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double out = 1.0;
  for (unsigned j = 1; j <= k; ++j) out = out * static_cast<double>(n - k + j) / static_cast<double>(j);
  return std::round(out);
}

double orbit_size(std::span<const index_t> sorted) {
  double out = factorial(static_cast<unsigned>(sorted.size()));
  for (const auto& run : occupation_of(sorted)) out /= factorial(run.second);
  return out;
}

multi_index merge_sorted(std::span<const index_t> a, std::span<const index_t> b) {
  multi_index out(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
  return out;
}

}  // namespace chaoskit::gaussian
