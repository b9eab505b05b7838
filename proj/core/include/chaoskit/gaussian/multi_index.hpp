#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace chaoskit::gaussian {

using index_t = std::uint32_t;

/// Ordered list of basis indices. A *canonical* multi-index is sorted
/// non-decreasing and represents one orbit of a symmetric tensor.
using multi_index = std::vector<index_t>;

/// (value, multiplicity) runs of a sorted multi-index.
using occupation = std::vector<std::pair<index_t, unsigned>>;

[[nodiscard]] bool is_canonical(std::span<const index_t> idx, std::size_t dim) noexcept;

[[nodiscard]] multi_index canonical(multi_index idx);

[[nodiscard]] occupation occupation_of(std::span<const index_t> sorted);

/// Number of distinct orderings of the multiset, n! / prod_j k_j!.
[[nodiscard]] double orbit_size(std::span<const index_t> sorted);

/// Merge of two sorted multi-indices (multiset union).
[[nodiscard]] multi_index merge_sorted(std::span<const index_t> a, std::span<const index_t> b);

[[nodiscard]] double factorial(unsigned n);
[[nodiscard]] double binomial(unsigned n, unsigned k);

/// Calls visit(tail, head) for every sub-multiset `tail` of size r of the
/// sorted multi-index, with `head` the complement. Both arguments are sorted.
template <class Visitor>
void for_each_split(std::span<const index_t> sorted, unsigned r, Visitor&& visit);

}  // namespace chaoskit::gaussian

#include "chaoskit/gaussian/detail/multi_index_impl.hpp"
