#include "chaoskit/gaussian/sampling.hpp"

#include "chaoskit/error.hpp"

namespace chaoskit::gaussian {

namespace {

std::mt19937_64 chunk_engine(std::uint64_t seed, std::size_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

gaussian_stream::gaussian_stream(std::size_t dim, std::uint64_t seed, std::size_t count)
    : dim_(dim), seed_(seed), count_(count) {
  if (dim == 0) throw validation_error("sample_gaussian: dim must be positive");
  if (count == 0) throw validation_error("sample_gaussian: count must be at least 1");
  start_chunk(0);
}

void gaussian_stream::start_chunk(std::size_t chunk) {
  engine_ = chunk_engine(seed_, chunk);
  normal_.reset();
}

bool gaussian_stream::next(std::span<double> out) {
  if (produced_ == count_) return false;
  if (out.size() != dim_) throw validation_error("gaussian_stream: output span has wrong length");
  if (produced_ > 0 && produced_ % chunk_points == 0) start_chunk(produced_ / chunk_points);
  for (double& v : out) v = normal_(engine_);
  ++produced_;
  return true;
}

void gaussian_stream::fill_chunk(std::size_t dim, std::uint64_t seed, std::size_t chunk, std::span<double> out) {
  if (dim == 0 || out.size() % dim != 0 || out.size() / dim > chunk_points) {
    throw validation_error("gaussian_stream::fill_chunk: bad output size");
  }
  auto engine = chunk_engine(seed, chunk);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (double& v : out) v = normal(engine);
}

std::vector<gaussian_point> sample_gaussian(std::size_t dim, std::uint64_t seed, std::size_t count) {
  gaussian_stream stream(dim, seed, count);
  std::vector<gaussian_point> out(count, gaussian_point(dim));
  for (auto& p : out) stream.next(p);
  return out;
}

}  // namespace chaoskit::gaussian
