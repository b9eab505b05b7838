#pragma once

namespace chaoskit::gaussian {

namespace detail {

template <class Visitor>
void split_rec(const occupation& occ, std::size_t pos, unsigned remaining,
               multi_index& tail, multi_index& head, Visitor& visit) {
  if (pos == occ.size()) {
    if (remaining == 0) visit(std::as_const(tail), std::as_const(head));
    return;
  }
  const auto [value, count] = occ[pos];
  const unsigned max_take = remaining < count ? remaining : count;
  for (unsigned take = 0; take <= max_take; ++take) {
    tail.insert(tail.end(), take, value);
    head.insert(head.end(), count - take, value);
    split_rec(occ, pos + 1, remaining - take, tail, head, visit);
    tail.resize(tail.size() - take);
    head.resize(head.size() - (count - take));
  }
}

}  // namespace detail

template <class Visitor>
void for_each_split(std::span<const index_t> sorted, unsigned r, Visitor&& visit) {
  if (r > sorted.size()) return;
  const occupation occ = occupation_of(sorted);
  multi_index tail;
  multi_index head;
  tail.reserve(r);
  head.reserve(sorted.size() - r);
  detail::split_rec(occ, 0, r, tail, head, visit);
}

}  // namespace chaoskit::gaussian
