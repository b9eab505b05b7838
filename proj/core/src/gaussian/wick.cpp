#include "chaoskit/gaussian/wick.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "chaoskit/error.hpp"

namespace chaoskit::gaussian {

double wick_moment(std::span<const chaos_vector> factors, std::span<const unsigned> powers) {
  if (factors.size() != powers.size()) throw validation_error("wick_moment: factors and powers differ in length");
  if (factors.empty()) return 1.0;
  const unsigned total = std::accumulate(powers.begin(), powers.end(), 0U);
  if (total > wick_factor_guard) {
    throw guard_exceeded_error("wick_moment: " + std::to_string(total) + " factors exceed the guard of " +
                               std::to_string(wick_factor_guard));
  }
  const std::size_t dim = factors.front().dim();
  std::vector<const chaos_vector*> sequence;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].dim() != dim) throw validation_error("wick_moment: dimension mismatch");
    if (powers[i] == 0) throw validation_error("wick_moment: powers must be positive");
    for (unsigned p = 0; p < powers[i]; ++p) sequence.push_back(&factors[i]);
  }
  if (sequence.size() == 1) return sequence.front()->expectation();

  // Multiply all but the last factor, then close with the isometry.
  chaos_vector acc = *sequence.front();
  for (std::size_t i = 1; i + 1 < sequence.size(); ++i) acc = chaos_product(acc, *sequence[i]);
  return isometry_inner(acc, *sequence.back());
}

double wick_moment(const chaos_vector& f, unsigned power) {
  const unsigned p[] = {power};
  return wick_moment(std::span<const chaos_vector>(&f, 1), p);
}

}  // namespace chaoskit::gaussian
