#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "chaoskit/error.hpp"
#include "chaoskit/sim/empirical.hpp"
#include "chaoskit/sim/simulate.hpp"
#include "chaoskit/stein/moments.hpp"
#include "chaoskit/stein/named_targets.hpp"

using namespace chaoskit;
using namespace chaoskit::sim;

namespace {

stein::target_measure target(const std::string& name, stein::param_map p = {}) {
  return stein::make_target(stein::named_target::make(name, std::move(p)));
}

}  // namespace

TEST_CASE("empirical distribution basics") {
  CHECK_THROWS_AS(empirical_distribution({1.0}), validation_error);
  CHECK_THROWS_AS(empirical_distribution({1.0, NAN}), validation_error);
  const empirical_distribution e({3.0, 1.0, 2.0, 2.0});
  CHECK(e.values().front() == 1.0);
  CHECK(e.cdf(0.5) == 0.0);
  CHECK(e.cdf(2.0) == doctest::Approx(0.75));
  CHECK(e.cdf(10.0) == 1.0);
  CHECK(e.mean() == doctest::Approx(2.0));

  const empirical_distribution a({0.0, 1.0, 2.0}), b({0.5, 1.5, 2.5});
  CHECK(wasserstein1_distance(a, a) == 0.0);
  CHECK(wasserstein1_distance(a, b) == doctest::Approx(0.5));
  CHECK(ks_distance(a, b) == doctest::Approx(1.0 / 3.0));
  // Unequal counts: shifting every value by c moves W1 by exactly c.
  const empirical_distribution c({0.0, 1.0}), d({2.0, 2.5, 3.0, 3.5});
  const empirical_distribution c2({1.0, 2.0});
  CHECK(wasserstein1_distance(c2, d) == doctest::Approx(wasserstein1_distance(c, d) - 1.0));
  CHECK(wasserstein1_distance(c, d) == doctest::Approx(wasserstein1_distance(d, c)));
}

TEST_CASE("exact samples agree with their targets") {
  for (const auto& [name, params] : std::vector<std::pair<std::string, stein::param_map>>{
           {"normal", {{"gamma", 2.0}}},
           {"gamma", {{"a", 2.0}, {"lambda", 1.0}}},
           {"uniform", {}},
           {"beta", {{"a", 2.0}, {"b", 3.0}}},
           {"student", {{"nu", 8.0}}}}) {
    const auto t = target(name, params);
    const auto e = sample_exact(t, 20000, 17);
    CAPTURE(name);
    CHECK(ks_distance(e, t) < 0.02);
    for (const auto& h : stein::test_function::dictionary()) {
      if (std::max(h.growth + 1.0, h.deriv_growth + stein::coeff_growth(t)) * 2.0 >= t.moment_limit()) continue;
      CAPTURE(h.name);
      CHECK(stein_residual_empirical(e, t, h).z() < 5.0);
    }
  }
  const auto t = target("normal", {{"gamma", 1.0}});
  const auto a = sample_exact(t, 5000, 1), b = sample_exact(t, 5000, 1);
  CHECK(a.values() == b.values());
  CHECK(ks_distance(a, sample_exact(t, 5000, 2)) > 0.0);
}

TEST_CASE("residual z detects the wrong target") {
  const auto e = sample_exact(target("normal", {{"gamma", 2.0}}), 20000, 3);
  const auto wrong = target("normal", {{"gamma", 1.0}});
  CHECK(stein_residual_empirical(e, wrong, stein::test_function::monomial(1)).z() > 10.0);
}

TEST_CASE("config validation") {
  const auto t = target("uniform");
  sim_config cfg;
  cfg.dt = 0.0;
  CHECK_THROWS_AS(validate(cfg, t), validation_error);
  cfg = {};
  cfg.thinning = 0;
  CHECK_THROWS_AS(validate(cfg, t), validation_error);
  cfg = {};
  cfg.samples = 1;
  CHECK_THROWS_AS(validate(cfg, t), validation_error);
  cfg = {};
  cfg.boundary_epsilon = 0.5;
  CHECK_THROWS_AS(validate(cfg, t), validation_error);
  cfg = {};
  cfg.start = 5.0;
  CHECK_THROWS_AS(validate(cfg, t), validation_error);
  CHECK_NOTHROW(validate(sim_config{}, t));
}

TEST_CASE("Euler-Maruyama chains") {
  sim_config cfg;
  cfg.dt = 1e-2;
  cfg.burn_in = 2000;
  cfg.samples = 5000;
  cfg.thinning = 100;
  cfg.seed = 42;

  SUBCASE("normal") {
    const auto t = target("normal", {{"gamma", 2.0}});
    const auto r = simulate(t, cfg);
    CHECK(r.distribution.count() == cfg.samples);
    CHECK(r.chain.size() == cfg.samples);
    CHECK(r.clamped == 0);
    CHECK(ks_distance(r.distribution, t) < 0.05);
    const auto again = simulate(t, cfg);
    CHECK(again.chain == r.chain);
    const auto res = stein_residual_empirical_batched(r.distribution, r.chain, t, stein::test_function::monomial(2));
    CHECK(res.z() < 5.0);
  }
  SUBCASE("gamma stays in its support") {
    const auto t = target("gamma", {{"a", 3.0}, {"lambda", 1.0}});
    const auto r = simulate(t, cfg);
    CHECK(r.distribution.values().front() > t.support().lower);
    CHECK(ks_distance(r.distribution, t) < 0.06);
  }
  SUBCASE("uniform needs clamping but little") {
    const auto t = target("uniform");
    const auto r = simulate(t, cfg);
    CHECK(r.distribution.values().front() > t.support().lower);
    CHECK(r.distribution.values().back() < t.support().upper);
    CHECK(r.clamp_fraction() < 0.5);
    CHECK(ks_distance(r.distribution, t) < 0.06);
  }
}
