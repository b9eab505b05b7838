#include "chaoskit/sim/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "chaoskit/error.hpp"

namespace chaoskit::sim {

empirical_distribution::empirical_distribution(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw validation_error("empirical distribution needs at least 2 samples");
  for (double v : values_) {
    if (!std::isfinite(v)) throw validation_error("empirical distribution has a non-finite sample");
  }
  std::sort(values_.begin(), values_.end());
}

double empirical_distribution::cdf(double x) const {
  const auto it = std::upper_bound(values_.begin(), values_.end(), x);
  return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
}

double empirical_distribution::mean() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s / static_cast<double>(values_.size());
}

double ks_distance(const empirical_distribution& e, const stein::target_measure& target) {
  const auto& v = e.values();
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double F = target.cdf(v[i]);
    d = std::max({d, std::abs(static_cast<double>(i + 1) / n - F), std::abs(F - static_cast<double>(i) / n)});
  }
  return d;
}

double ks_distance(const empirical_distribution& a, const empirical_distribution& b) {
  const auto& x = a.values();
  const auto& y = b.values();
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double t = std::min(x[i], y[j]);
    while (i < x.size() && x[i] <= t) ++i;
    while (j < y.size() && y[j] <= t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / x.size() - static_cast<double>(j) / y.size()));
  }
  return d;
}

double wasserstein1_distance(const empirical_distribution& a, const empirical_distribution& b) {
  const auto& x = a.values();
  const auto& y = b.values();
  if (x.size() == y.size()) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::abs(x[i] - y[i]);
    return s / static_cast<double>(x.size());
  }
  // Merge the breakpoints k/na and l/nb of both quantile step functions.
  const double na = static_cast<double>(x.size());
  const double nb = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double u = 0.0;
  double s = 0.0;
  while (i < x.size() && j < y.size()) {
    const double ua = static_cast<double>(i + 1) / na;
    const double ub = static_cast<double>(j + 1) / nb;
    const double next = std::min(ua, ub);
    s += (next - u) * std::abs(x[i] - y[j]);
    u = next;
    if (ua <= next) ++i;
    if (ub <= next) ++j;
  }
  return s;
}

double residual_estimate::z() const {
  if (std_error > 0.0) return std::abs(mean) / std_error;
  return mean == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

namespace {

double stein_term(const stein::target_measure& target, const stein::test_function& h, double y) {
  return 0.5 * target.a(y) * h.dh(y) + target.drift(y) * h.h(y);
}

residual_estimate mean_and_error(std::span<const double> terms) {
  const double n = static_cast<double>(terms.size());
  double mean = 0.0;
  for (double t : terms) mean += t;
  mean /= n;
  double ss = 0.0;
  for (double t : terms) ss += (t - mean) * (t - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

}  // namespace

residual_estimate stein_residual_empirical(const empirical_distribution& e, const stein::target_measure& target,
                                           const stein::test_function& h) {
  std::vector<double> terms;
  terms.reserve(e.count());
  for (double y : e.values()) terms.push_back(stein_term(target, h, y));
  return mean_and_error(terms);
}

residual_estimate stein_residual_empirical_batched(const empirical_distribution& e, std::span<const double> chain_order,
                                                   const stein::target_measure& target,
                                                   const stein::test_function& h, std::size_t batches) {
  if (chain_order.size() != e.count()) throw validation_error("chain order must list every sample once");
  std::vector<double> terms;
  terms.reserve(chain_order.size());
  for (double y : chain_order) terms.push_back(stein_term(target, h, y));
  auto out = mean_and_error(terms);
  const std::size_t per = terms.size() / std::max<std::size_t>(batches, 2);
  if (per >= 2) {
    const std::size_t nb = terms.size() / per;
    std::vector<double> means;
    for (std::size_t b = 0; b < nb; ++b) {
      double s = 0.0;
      for (std::size_t k = 0; k < per; ++k) s += terms[b * per + k];
      means.push_back(s / static_cast<double>(per));
    }
    const auto bm = mean_and_error(means);
    out.std_error = std::max(out.std_error, bm.std_error);
  }
  return out;
}

empirical_distribution sample_exact(const stein::target_measure& target, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> out;
  out.reserve(count);
  while (out.size() < count) {
    const double u = unif(rng);
    if (u <= 0.0 || u >= 1.0) continue;
    out.push_back(target.quantile(u));
  }
  return empirical_distribution(std::move(out));
}

}  // namespace chaoskit::sim
