#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace chaoskit::gaussian {

/// A realization (B(e_1), ..., B(e_d)).
using gaussian_point = std::vector<double>;

/// Deterministic stream of i.i.d. standard Gaussian vectors.
///
/// The stream is cut into chunks of `chunk_points` points; chunk c draws from
/// its own engine seeded by (seed, c), so any chunk can be regenerated
/// independently and parallel consumers see the same numbers as a serial one.
class gaussian_stream {
 public:
  static constexpr std::size_t chunk_points = 4096;

  gaussian_stream(std::size_t dim, std::uint64_t seed, std::size_t count);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t remaining() const noexcept { return count_ - produced_; }

  /// Writes the next point into out (size dim); false once exhausted.
  bool next(std::span<double> out);

  /// Fills out (size n_points * dim) with points [c*chunk_points, c*chunk_points + n_points).
  static void fill_chunk(std::size_t dim, std::uint64_t seed, std::size_t chunk, std::span<double> out);

 private:
  void start_chunk(std::size_t chunk);

  std::size_t dim_;
  std::uint64_t seed_;
  std::size_t count_;
  std::size_t produced_ = 0;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

[[nodiscard]] std::vector<gaussian_point> sample_gaussian(std::size_t dim, std::uint64_t seed, std::size_t count);

}  // namespace chaoskit::gaussian
