#include "chaoskit/gaussian/symmetric_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "chaoskit/error.hpp"
#include "chaoskit/gaussian/hermite.hpp"

namespace chaoskit::gaussian {

symmetric_kernel::symmetric_kernel(std::size_t dim, unsigned order) : dim_(dim), order_(order) {
  if (dim == 0) throw validation_error("kernel dim must be positive");
}

symmetric_kernel symmetric_kernel::scalar(std::size_t dim, double value) {
  symmetric_kernel k(dim, 0);
  k.add({}, value);
  return k;
}

symmetric_kernel symmetric_kernel::elementary(std::size_t dim, multi_index idx, double weight) {
  symmetric_kernel k(dim, static_cast<unsigned>(idx.size()));
  idx = canonical(std::move(idx));
  k.add(idx, weight / orbit_size(idx));
  return k;
}

double symmetric_kernel::at(std::span<const index_t> idx) const {
  if (idx.size() != order_) throw validation_error("multi-index length does not match kernel order");
  multi_index key(idx.begin(), idx.end());
  std::sort(key.begin(), key.end());
  const auto it = entries_.find(key);
  return it == entries_.end() ? 0.0 : it->second;
}

void symmetric_kernel::add(const multi_index& canonical_idx, double value) {
  if (canonical_idx.size() != order_) {
    throw validation_error("multi-index has length " + std::to_string(canonical_idx.size()) +
                           ", kernel order is " + std::to_string(order_));
  }
  if (!is_canonical(canonical_idx, dim_)) {
    throw validation_error("multi-index is not sorted non-decreasing within [0, dim)");
  }
  entries_[canonical_idx] += value;
}

double symmetric_kernel::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& [idx, v] : entries_) s += orbit_size(idx) * v * v;
  return s;
}

double symmetric_kernel::norm() const noexcept { return std::sqrt(norm_squared()); }

symmetric_kernel symmetric_kernel::partial(index_t i) const {
  if (order_ == 0) throw validation_error("partial kernel of an order-0 kernel");
  if (i >= dim_) throw validation_error("partial index out of range");
  symmetric_kernel out(dim_, order_ - 1);
  for (const auto& [idx, v] : entries_) {
    const auto pos = std::lower_bound(idx.begin(), idx.end(), i);
    if (pos == idx.end() || *pos != i) continue;
    multi_index rest;
    rest.reserve(idx.size() - 1);
    rest.insert(rest.end(), idx.begin(), pos);
    rest.insert(rest.end(), std::next(pos), idx.end());
    out.entries_.emplace(std::move(rest), v);
  }
  return out;
}

symmetric_kernel symmetric_kernel::pruned(double tol) const {
  symmetric_kernel out(dim_, order_);
  for (const auto& [idx, v] : entries_) {
    if (std::abs(v) > tol) out.entries_.emplace(idx, v);
  }
  return out;
}

void symmetric_kernel::require_compatible(const symmetric_kernel& other) const {
  if (other.dim_ != dim_) throw validation_error("kernel dimension mismatch");
  if (other.order_ != order_) throw validation_error("kernel order mismatch");
}

symmetric_kernel& symmetric_kernel::operator+=(const symmetric_kernel& other) {
  require_compatible(other);
  for (const auto& [idx, v] : other.entries_) entries_[idx] += v;
  return *this;
}

symmetric_kernel& symmetric_kernel::operator-=(const symmetric_kernel& other) {
  require_compatible(other);
  for (const auto& [idx, v] : other.entries_) entries_[idx] -= v;
  return *this;
}

symmetric_kernel& symmetric_kernel::operator*=(double c) {
  for (auto& [idx, v] : entries_) v *= c;
  return *this;
}

double inner(const symmetric_kernel& f, const symmetric_kernel& g) {
  if (f.dim() != g.dim()) throw validation_error("kernel dimension mismatch");
  if (f.order() != g.order()) return 0.0;
  const auto& small = f.nnz() <= g.nnz() ? f.entries() : g.entries();
  const auto& large = f.nnz() <= g.nnz() ? g.entries() : f.entries();
  double s = 0.0;
  for (const auto& [idx, v] : small) {
    const auto it = large.find(idx);
    if (it != large.end()) s += orbit_size(idx) * v * it->second;
  }
  return s;
}

double eval_multiple_integral(const symmetric_kernel& f, std::span<const double> x) {
  if (x.size() != f.dim()) throw validation_error("Gaussian point length does not match kernel dim");
  const unsigned n = f.order();
  if (n == 0) return f.empty() ? 0.0 : f.entries().begin()->second;

  // H_k(x_j) is computed lazily per coordinate touched by the kernel.
  std::vector<double> table;
  std::vector<char> ready(f.dim(), 0);
  table.resize(f.dim() * (n + 1));
  auto herm = [&](index_t j, unsigned k) {
    double* row = table.data() + static_cast<std::size_t>(j) * (n + 1);
    if (!ready[j]) {
      hermite_table(x[j], std::span<double>(row, n + 1));
      ready[j] = 1;
    }
    return row[k];
  };

  double sum = 0.0;
  for (const auto& [idx, v] : f.entries()) {
    double prod = 1.0;
    std::size_t k = 0;
    while (k < idx.size()) {
      std::size_t run = 1;
      while (k + run < idx.size() && idx[k + run] == idx[k]) ++run;
      prod *= herm(idx[k], static_cast<unsigned>(run));
      k += run;
    }
    sum += v * prod;
  }
  return factorial(n) * sum;
}

}  // namespace chaoskit::gaussian
