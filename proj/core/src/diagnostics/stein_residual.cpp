#include "chaoskit/diagnostics/stein_residual.hpp"

#include <cmath>
#include <map>

#include "chaoskit/gaussian/contraction.hpp"
#include "chaoskit/gaussian/multi_index.hpp"
#include "chaoskit/gaussian/sampling.hpp"

namespace chaoskit::diagnostics {

using gaussian::binomial;
using gaussian::factorial;

chaos_vector coeff_of_chaos(const chaos_vector& F, const poly_coeff& coeff) {
  chaos_vector out = chaos_vector::constant(F.dim(), coeff.gamma);
  if (coeff.beta != 0.0) out += coeff.beta * F;
  if (coeff.alpha != 0.0) out += coeff.alpha * gaussian::chaos_product(F, F);
  return out;
}

namespace {

chaos_residual collect(const std::map<unsigned, symmetric_kernel>& kernels) {
  chaos_residual out;
  for (const auto& [k, h] : kernels) {
    const double v = factorial(k) * h.norm_squared();
    out.levels.push_back({k, v});
    out.value += v;
  }
  return out;
}

template <class Fn>
mc_estimate sample_mean(const symmetric_kernel& f, std::size_t samples, std::uint64_t seed, Fn&& per_sample) {
  gaussian::gaussian_stream stream(f.dim(), seed, samples);
  std::vector<double> x(f.dim());
  // Welford keeps the variance stable for large sample counts.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t count = 0;
  while (stream.next(x)) {
    const double v = per_sample(std::span<const double>(x));
    ++count;
    const double d = v - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (v - mean);
  }
  mc_estimate out;
  out.mean = mean;
  out.samples = count;
  out.std_error = count > 1 ? std::sqrt(m2 / static_cast<double>(count - 1) / static_cast<double>(count)) : 0.0;
  return out;
}

}  // namespace

chaos_residual stein_residual_chaos(const symmetric_kernel& f, const poly_coeff& coeff) {
  const unsigned n = f.order();
  const chaos_vector a = coeff_of_chaos(chaos_vector::single(f), coeff);
  std::map<unsigned, symmetric_kernel> kernels;
  for (const auto& [k, g] : a.levels()) kernels.emplace(k, 0.5 * g);
  if (n >= 1) {
    for (unsigned l = 0; l <= n - 1; ++l) {
      const unsigned k = 2 * l;
      const double fa = factorial(n - 1 - l);
      const double bc = binomial(n - 1, l);
      const double w = n * fa * bc * bc;
      auto term = w * gaussian::contract_symmetrized(f, f, n - l);
      auto [it, fresh] = kernels.try_emplace(k, symmetric_kernel(f.dim(), k));
      it->second -= term;
    }
  }
  return collect(kernels);
}

chaos_residual stein_residual_subtraction(const symmetric_kernel& f, const poly_coeff& coeff) {
  const chaos_vector F = chaos_vector::single(f);
  chaos_vector diff = 0.5 * coeff_of_chaos(F, coeff);
  if (f.order() >= 1) diff -= (1.0 / f.order()) * gaussian::malliavin_inner(F, F);
  std::map<unsigned, symmetric_kernel> kernels(diff.levels().begin(), diff.levels().end());
  return collect(kernels);
}

pathwise_sampler::pathwise_sampler(const symmetric_kernel& f) : f_(f) {
  if (f.order() >= 1) {
    for (auto& p : gaussian::malliavin_gradient_kernels(f)) {
      if (!p.empty()) partials_.push_back(std::move(p));
    }
  }
}

double pathwise_sampler::value(std::span<const double> x) const { return eval_multiple_integral(f_, x); }

double pathwise_sampler::gradient_norm_squared(std::span<const double> x) const {
  double s = 0.0;
  for (const auto& p : partials_) {
    const double v = eval_multiple_integral(p, x);
    s += v * v;
  }
  const double n = f_.order();
  return n * n * s;
}

mc_estimate stein_residual_mc(const symmetric_kernel& f, const poly_coeff& coeff, std::size_t samples,
                              std::uint64_t seed) {
  const pathwise_sampler ps(f);
  const double n = f.order() == 0 ? 1.0 : f.order();
  return sample_mean(f, samples, seed, [&](std::span<const double> x) {
    const double r = 0.5 * coeff(ps.value(x)) - ps.gradient_norm_squared(x) / n;
    return r * r;
  });
}

double prop24_gap_chaos(const symmetric_kernel& f, const poly_coeff& coeff) {
  const chaos_vector F = chaos_vector::single(f);
  const double ea2 = coeff_of_chaos(F, coeff).second_moment();
  const double n = f.order() == 0 ? 1.0 : f.order();
  const double ed4 = gaussian::malliavin_inner(F, F).second_moment();
  return std::abs(0.25 * ea2 - ed4 / (n * n));
}

mc_estimate prop24_gap_mc(const symmetric_kernel& f, const poly_coeff& coeff, std::size_t samples,
                          std::uint64_t seed) {
  const pathwise_sampler ps(f);
  const double n = f.order() == 0 ? 1.0 : f.order();
  return sample_mean(f, samples, seed, [&](std::span<const double> x) {
    const double a = coeff(ps.value(x));
    const double d = ps.gradient_norm_squared(x);
    return 0.25 * a * a - d * d / (n * n);
  });
}

}  // namespace chaoskit::diagnostics
