#include "chaoskit/sim/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "chaoskit/error.hpp"

namespace chaoskit::sim {

void validate(const sim_config& cfg, const stein::target_measure& target) {
  if (!(cfg.dt > 0.0 && std::isfinite(cfg.dt))) throw validation_error("--dt must be a positive number");
  if (cfg.samples < 2) throw validation_error("--samples must be at least 2");
  if (cfg.thinning < 1) throw validation_error("--thinning must be at least 1");
  const auto& s = target.support();
  if (!(cfg.boundary_epsilon > 0.0)) throw validation_error("boundary_epsilon must be positive");
  if (s.bounded() && !(cfg.boundary_epsilon < 1e-3 * s.width())) {
    throw validation_error("boundary_epsilon must be small relative to the support width");
  }
  if (!std::isnan(cfg.start) && !s.contains(cfg.start)) throw validation_error("start must lie inside the support");
}

sim_result simulate(const stein::target_measure& target, const sim_config& cfg) {
  validate(cfg, target);
  const auto& s = target.support();
  const double lo = std::isfinite(s.lower) ? s.lower + cfg.boundary_epsilon : -stein::infinity;
  const double hi = std::isfinite(s.upper) ? s.upper - cfg.boundary_epsilon : stein::infinity;

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double sqdt = std::sqrt(cfg.dt);
  double x = std::isnan(cfg.start) ? target.drift_root() : cfg.start;
  x = std::clamp(x, lo, hi);

  std::vector<double> chain;
  chain.reserve(cfg.samples);
  std::size_t steps = 0;
  std::size_t clamped = 0;
  auto advance = [&] {
    const double a = std::max(target.a(x), 0.0);
    double next = x + target.drift(x) * cfg.dt + std::sqrt(a) * sqdt * normal(rng);
    if (!std::isfinite(next)) {
      throw numeric_error("simulation state became non-finite at step " + std::to_string(steps) +
                          "; reduce --dt");
    }
    if (next < lo || next > hi) {
      next = std::clamp(next, lo, hi);
      ++clamped;
    }
    x = next;
    ++steps;
  };
  for (std::size_t i = 0; i < cfg.burn_in; ++i) advance();
  while (chain.size() < cfg.samples) {
    for (std::size_t k = 0; k < cfg.thinning; ++k) advance();
    chain.push_back(x);
  }
  if (2 * clamped > steps) {
    throw numeric_error("more than half of the simulation steps were clamped; reduce --dt");
  }
  std::vector<double> copy = chain;
  return {empirical_distribution(std::move(copy)), std::move(chain), steps, clamped};
}

}  // namespace chaoskit::sim
