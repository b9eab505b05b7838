#include "chaoskit/gaussian/chaos_vector.hpp"

#include <algorithm>

#include "chaoskit/error.hpp"
#include "chaoskit/gaussian/contraction.hpp"

namespace chaoskit::gaussian {

chaos_vector::chaos_vector(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw validation_error("chaos vector dim must be positive");
}

chaos_vector chaos_vector::single(symmetric_kernel f) {
  chaos_vector out(f.dim());
  out.levels_.emplace(f.order(), std::move(f));
  return out;
}

chaos_vector chaos_vector::constant(std::size_t dim, double value) {
  return single(symmetric_kernel::scalar(dim, value));
}

symmetric_kernel chaos_vector::level(unsigned k) const {
  const auto it = levels_.find(k);
  return it == levels_.end() ? symmetric_kernel(dim_, k) : it->second;
}

unsigned chaos_vector::max_level() const noexcept { return levels_.empty() ? 0 : levels_.rbegin()->first; }

double chaos_vector::expectation() const {
  const auto it = levels_.find(0);
  if (it == levels_.end() || it->second.empty()) return 0.0;
  return it->second.entries().begin()->second;
}

double chaos_vector::second_moment() const {
  double s = 0.0;
  for (const auto& [k, g] : levels_) s += factorial(k) * g.norm_squared();
  return s;
}

double chaos_vector::evaluate(std::span<const double> x) const {
  if (x.size() != dim_) throw validation_error("Gaussian point length does not match chaos vector dim");
  double s = 0.0;
  for (const auto& [k, g] : levels_) s += eval_multiple_integral(g, x);
  return s;
}

void chaos_vector::add(const symmetric_kernel& f) {
  if (f.dim() != dim_) throw validation_error("chaos vector dimension mismatch");
  auto it = levels_.find(f.order());
  if (it == levels_.end()) {
    levels_.emplace(f.order(), f);
  } else {
    it->second += f;
  }
}

chaos_vector& chaos_vector::operator+=(const chaos_vector& other) {
  for (const auto& [k, g] : other.levels_) add(g);
  return *this;
}

chaos_vector& chaos_vector::operator-=(const chaos_vector& other) {
  for (const auto& [k, g] : other.levels_) add(g * -1.0);
  return *this;
}

chaos_vector& chaos_vector::operator*=(double c) {
  for (auto& [k, g] : levels_) g *= c;
  return *this;
}

double isometry_inner(const chaos_vector& f, const chaos_vector& g) {
  if (f.dim() != g.dim()) throw validation_error("chaos vector dimension mismatch");
  double s = 0.0;
  for (const auto& [k, fk] : f.levels()) {
    const auto it = g.levels().find(k);
    if (it != g.levels().end()) s += factorial(k) * inner(fk, it->second);
  }
  return s;
}

chaos_vector chaos_product(const chaos_vector& f, const chaos_vector& g) {
  if (f.dim() != g.dim()) throw validation_error("chaos_product: dimension mismatch");
  chaos_vector out(f.dim());
  for (const auto& [n, fk] : f.levels()) {
    if (fk.empty()) continue;
    for (const auto& [m, gk] : g.levels()) {
      if (gk.empty()) continue;
      for (unsigned r = 0; r <= std::min(n, m); ++r) {
        const double weight = factorial(r) * binomial(n, r) * binomial(m, r);
        out.add(contract_symmetrized(fk, gk, r) * weight);
      }
    }
  }
  return out;
}

chaos_vector malliavin_inner(const chaos_vector& f, const chaos_vector& g) {
  if (f.dim() != g.dim()) throw validation_error("malliavin_inner: dimension mismatch");
  chaos_vector out(f.dim());
  for (const auto& [n, fk] : f.levels()) {
    if (n == 0 || fk.empty()) continue;
    for (const auto& [m, gk] : g.levels()) {
      if (m == 0 || gk.empty()) continue;
      for (unsigned r = 0; r + 1 <= std::min(n, m); ++r) {
        const double weight = static_cast<double>(n) * m * factorial(r) * binomial(n - 1, r) * binomial(m - 1, r);
        out.add(contract_symmetrized(fk, gk, r + 1) * weight);
      }
    }
  }
  return out;
}

chaos_vector ou_inverse(const chaos_vector& f) {
  if (f.expectation() != 0.0) throw validation_error("ou_inverse: input is not centered (level-0 component is non-zero)");
  chaos_vector out(f.dim());
  for (const auto& [k, g] : f.levels()) {
    if (k == 0) continue;
    out.add(g * (1.0 / k));
  }
  return out;
}

std::vector<symmetric_kernel> malliavin_gradient_kernels(const symmetric_kernel& f) {
  std::vector<symmetric_kernel> out;
  out.reserve(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) out.push_back(f.partial(static_cast<index_t>(i)));
  return out;
}

}  // namespace chaoskit::gaussian
