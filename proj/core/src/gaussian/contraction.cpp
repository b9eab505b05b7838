#include "chaoskit/gaussian/contraction.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "chaoskit/error.hpp"

namespace chaoskit::gaussian {

namespace {

// The contracted slots of a symmetric kernel can be taken to be any r of its
// arguments, so f(a, t) depends only on the multisets A of a and T of t. Each
// kernel is grouped as T -> [(A, f(A, T))].
struct head_entry {
  multi_index head;
  double value;
  double arrangements;  // orbit size of head
};
using grouped = std::map<multi_index, std::vector<head_entry>>;

grouped group_by_tail(const symmetric_kernel& f, unsigned r) {
  grouped out;
  for (const auto& [idx, v] : f.entries()) {
    for_each_split(idx, r, [&](const multi_index& tail, const multi_index& head) {
      out[tail].push_back({head, v, orbit_size(head)});
    });
  }
  return out;
}

void check_args(const symmetric_kernel& f, const symmetric_kernel& g, unsigned r) {
  if (f.dim() != g.dim()) throw validation_error("contraction: kernel dimension mismatch");
  if (r > std::min(f.order(), g.order())) throw validation_error("contraction: r exceeds min(n, m)");
}

// R(A, B) = sum over tail multisets T of (#orderings of T) f(A, T) g(B, T).
std::map<std::pair<multi_index, multi_index>, double> bi_multiset_contraction(const symmetric_kernel& f,
                                                                            const symmetric_kernel& g,
                                                                            unsigned r) {
  const grouped gf = group_by_tail(f, r);
  const grouped gg = &f == &g ? gf : group_by_tail(g, r);
  std::map<std::pair<multi_index, multi_index>, double> out;
  for (const auto& [tail, fs] : gf) {
    const auto it = gg.find(tail);
    if (it == gg.end()) continue;
    const double w = orbit_size(tail);
    for (const auto& a : fs) {
      for (const auto& b : it->second) out[{a.head, b.head}] += w * a.value * b.value;
    }
  }
  return out;
}

}  // namespace

sparse_tensor contract(const symmetric_kernel& f, const symmetric_kernel& g, unsigned r) {
  check_args(f, g, r);
  sparse_tensor out(f.dim(), f.order() + g.order() - 2 * r);
  for (const auto& [heads, value] : bi_multiset_contraction(f, g, r)) {
    multi_index a = heads.first;
    do {
      multi_index b = heads.second;
      do {
        multi_index idx = a;
        idx.insert(idx.end(), b.begin(), b.end());
        out.add(idx, value);
      } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));
  }
  return out;
}

symmetric_kernel contract_symmetrized(const symmetric_kernel& f, const symmetric_kernel& g, unsigned r) {
  check_args(f, g, r);
  const grouped gf = group_by_tail(f, r);
  const grouped gg = &f == &g ? gf : group_by_tail(g, r);
  // Bucket c accumulates the sum of the ordered contraction over the orbit of c.
  std::map<multi_index, double> buckets;
  for (const auto& [tail, fs] : gf) {
    const auto it = gg.find(tail);
    if (it == gg.end()) continue;
    const double w = orbit_size(tail);
    for (const auto& a : fs) {
      for (const auto& b : it->second) {
        buckets[merge_sorted(a.head, b.head)] += w * a.value * a.arrangements * b.value * b.arrangements;
      }
    }
  }
  symmetric_kernel out(f.dim(), f.order() + g.order() - 2 * r);
  for (const auto& [idx, sum] : buckets) out.add(idx, sum / orbit_size(idx));
  return out;
}

double contraction_norm_squared(const symmetric_kernel& f, const symmetric_kernel& g, unsigned r) {
  check_args(f, g, r);
  double s = 0.0;
  for (const auto& [heads, value] : bi_multiset_contraction(f, g, r)) {
    s += orbit_size(heads.first) * orbit_size(heads.second) * value * value;
  }
  return s;
}

}  // namespace chaoskit::gaussian
