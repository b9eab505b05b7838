#include "chaoskit/gaussian/sparse_tensor.hpp"

#include <algorithm>

#include "chaoskit/error.hpp"

namespace chaoskit::gaussian {

sparse_tensor::sparse_tensor(std::size_t dim, unsigned order) : dim_(dim), order_(order) {
  if (dim == 0) throw validation_error("tensor dim must be positive");
}

sparse_tensor sparse_tensor::expand(const symmetric_kernel& f) {
  sparse_tensor out(f.dim(), f.order());
  for (const auto& [idx, v] : f.entries()) {
    multi_index perm = idx;
    do {
      out.entries_[perm] += v;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

double sparse_tensor::at(const multi_index& idx) const {
  const auto it = entries_.find(idx);
  return it == entries_.end() ? 0.0 : it->second;
}

void sparse_tensor::add(const multi_index& idx, double value) {
  if (idx.size() != order_) throw validation_error("multi-index length does not match tensor order");
  for (index_t i : idx) {
    if (i >= dim_) throw validation_error("multi-index entry out of range");
  }
  entries_[idx] += value;
}

double sparse_tensor::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& [idx, v] : entries_) s += v * v;
  return s;
}

symmetric_kernel symmetrize(const sparse_tensor& f) {
  std::map<multi_index, double> buckets;
  for (const auto& [idx, v] : f.entries()) buckets[canonical(idx)] += v;
  symmetric_kernel out(f.dim(), f.order());
  for (const auto& [idx, sum] : buckets) out.add(idx, sum / orbit_size(idx));
  return out;
}

}  // namespace chaoskit::gaussian
