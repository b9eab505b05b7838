#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <random>
#include <string>

#include "chaoskit/diagnostics/stein_residual.hpp"
#include "chaoskit/error.hpp"
#include "chaoskit/gaussian/chaos_vector.hpp"
#include "chaoskit/stein/mble.hpp"
#include "chaoskit/stein/moments.hpp"
#include "chaoskit/stein/named_targets.hpp"
#include "chaoskit/stein/stein_solution.hpp"
#include "random_kernels.hpp"

using namespace chaoskit;
using namespace chaoskit::stein;
using testing_support::rel_err;

namespace {

std::vector<named_target> sample_targets() {
  return {
      named_target::make("normal", {{"gamma", 1.7}}),
      named_target::make("student", {{"nu", 5.0}}),
      named_target::make("pareto", {{"nu", 6.0}}),
      named_target::make("gamma", {{"a", 2.0}, {"lambda", 1.5}}),
      named_target::make("inverse_gamma", {{"delta", 2.0}, {"lambda", 6.0}}),
      named_target::make("f", {{"a", 4.0}, {"b", 12.0}}),
      named_target::make("uniform", {}),
      named_target::make("beta", {{"a", 2.0}, {"b", 3.0}}),
  };
}

double moment_by_quadrature(const target_measure& t, int k) {
  return t.expect([k](double x) { return std::pow(x, k); }, {1e-12, 1e-10, 4000});
}

}  // namespace

TEST_CASE("named target validation") {
  CHECK_THROWS_AS((void)named_target::make("student", {{"nu", 1.0}}), validation_error);
  CHECK_THROWS_AS((void)named_target::make("gamma", {{"a", 2.0}}), validation_error);
  CHECK_THROWS_AS((void)named_target::make("gamma", {{"a", 2.0}, {"lambda", 1.0}, {"nu", 3.0}}), validation_error);
  CHECK_THROWS_AS((void)named_target::make("cauchy", {}), validation_error);
  try {
    (void)named_target::make("beta", {{"a", -1.0}, {"b", 1.0}});
    FAIL("expected a validation error");
  } catch (const validation_error& e) {
    CHECK(std::string(e.what()).find("'a'") != std::string::npos);
  }
  CHECK(target_names().size() == 8);
}

TEST_CASE("closed-form coefficients of the named targets") {
  auto coeff = [](std::string_view n, param_map p) { return closed_form_coeff(named_target::make(n, p)); };
  CHECK(coeff("normal", {{"gamma", 3.0}}) == poly_coeff{0.0, 0.0, 6.0});
  const auto st = coeff("student", {{"nu", 5.0}});
  CHECK(st.alpha == doctest::Approx(0.5));
  CHECK(st.gamma == doctest::Approx(2.5));
  const auto g = coeff("gamma", {{"a", 2.0}, {"lambda", 1.0}});
  CHECK(g == poly_coeff{0.0, 2.0, 4.0});
  const auto u = coeff("uniform", {});
  CHECK(u == poly_coeff{-1.0, 0.0, 0.25});
}

TEST_CASE("target invariants and quadrature coefficient agree with closed forms") {
  for (const auto& nt : sample_targets()) {
    const auto t = make_target(nt);
    CAPTURE(t.name());
    const auto chk = check_target(t);
    CHECK(std::abs(chk.mass - 1.0) < 1e-8);
    CHECK(std::abs(chk.drift_mean) < 1e-8);
    CHECK(chk.min_coeff > 0.0);
    const auto numeric = coeff_from_density([&](double x) { return t.density(x); }, {}, t.support());
    const auto c = closed_form_coeff(nt);
    double worst = 0.0;
    for (double x : interior_grid(t, 200)) worst = std::max(worst, std::abs(numeric(x) - c(x)) / std::abs(c(x)));
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("quadrature coefficient examples") {
  const auto n = normal_target(1.3);
  const auto an = coeff_from_density([&](double x) { return n.density(x); }, {}, n.support());
  for (double x : {-2.0, 0.0, 1.5}) CHECK(an(x) == doctest::Approx(2.6).epsilon(1e-8));
  const auto u = uniform_target();
  const auto au = coeff_from_density([&](double x) { return u.density(x); }, {}, u.support());
  for (double x : {-0.4, 0.0, 0.3}) CHECK(au(x) == doctest::Approx(0.25 - x * x).epsilon(1e-8));
  const auto s = student_target(5.0);
  const auto as = coeff_from_density([&](double x) { return s.density(x); }, {}, s.support());
  for (int i = 0; i <= 40; ++i) {
    const double x = -10.0 + 0.5 * i;
    CHECK(rel_err(as(x), 0.5 * (x * x + 5.0)) < 1e-6);
  }
  // Unnormalized densities are rejected.
  CHECK_THROWS_AS((void)coeff_from_density([](double x) { return 2.0 * std::exp(-x * x / 2) / std::sqrt(2 * M_PI); },
                                           {}, interval{}),
                  validation_error);
}

TEST_CASE("stein solution") {
  const auto n = normal_target(1.0);
  const stein_solution gx(n, [](double x) { return x; });
  for (double x : interior_grid(n, 41)) CHECK(std::abs(gx(x) + 1.0) < 1e-8);
  const stein_solution gc(n, [](double) { return 3.0; });
  for (double x : {-1.0, 0.0, 2.0}) CHECK(std::abs(gc(x)) < 1e-12);

  const target_measure targets[] = {normal_target(1.0), gamma_target(1.0, 1.0), gamma_target(2.0, 1.0),
                                    beta_target(2.0, 3.0)};
  for (const auto& t : targets) {
    const double med = t.quantile(0.5);
    std::vector<std::pair<std::string, real_fn>> fs = {
        {"x", [](double x) { return x; }},
        {"x^2", [](double x) { return x * x; }},
        {"indicator", [med](double x) { return x > med ? 1.0 : 0.0; }},
    };
    for (const auto& [name, f] : fs) {
      CAPTURE(t.name());
      CAPTURE(name);
      const stein_solution g(t, f);
      double worst = 0.0;
      for (double x : interior_grid(t, 60)) {
        // Steer clear of the jump, where the equation holds only one-sidedly.
        if (name == "indicator" && std::abs(x - med) < 1e-3) continue;
        worst = std::max(worst, std::abs(g.residual(x)));
      }
      CHECK(worst < 1e-6);
    }
  }
}

TEST_CASE("stein identity residual") {
  const auto n = normal_target(1.0);
  CHECK(std::abs(stein_identity_residual(n, test_function::monomial(1))) < 1e-10);
  // Integrability: Student(5) has moments below order 5 only.
  const auto s = student_target(5.0);
  CHECK(std::abs(stein_identity_residual(s, test_function::monomial(3))) < 1e-8);
  CHECK_THROWS_AS((void)stein_identity_residual(s, test_function::monomial(5)), validation_error);

  // h = x^{2k-1} reproduces the moment recursion for each target.
  for (const auto& nt : sample_targets()) {
    const auto t = make_target(nt);
    const auto c = closed_form_coeff(nt);
    CAPTURE(t.name());
    std::vector<double> m{1.0, 0.0};
    for (int j = 2; j < 9 && j + 1 < t.moment_limit(); ++j) {
      m.push_back(moment_by_quadrature(t, j));
      if (j % 2 == 0) {
        CHECK(std::abs(stein_identity_residual(t, test_function::monomial(j - 1))) < 1e-6 * std::max(1.0, m[j]));
        std::vector<double> lower(m.begin(), m.begin() + j);
        CHECK(rel_err(moment_recursion(c, j, lower), m[j]) < 1e-6);
      }
    }
  }
}

TEST_CASE("polynomial moment closed forms") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> pa(0.5, 5.0), pl(0.3, 3.0);
  for (int i = 0; i < 20; ++i) {
    const double a = pa(rng);
    const double l = pl(rng);
    const auto m = poly_moments({0.0, 2.0 / l, 2.0 * a / (l * l)});
    CHECK(rel_err(m.m2, a / (l * l)) < 1e-14);
    CHECK(rel_err(m.m3, 2.0 * a / (l * l * l)) < 1e-14);
    CHECK(rel_err(m.m4, 3.0 * a * (a + 2.0) / std::pow(l, 4)) < 1e-14);
  }
  const auto nm = poly_moments({0.0, 0.0, 2.0 * 1.5});
  CHECK(nm.m2 == doctest::Approx(1.5));
  CHECK(nm.m3 == 0.0);
  CHECK(nm.m4 == doctest::Approx(3.0 * 1.5 * 1.5));
  const auto sm = poly_moments({0.5, 0.0, 2.5});
  CHECK(sm.m2 == doctest::Approx(5.0 / 3.0));
  CHECK(sm.m4 == doctest::Approx(25.0));
  const auto s = student_target(5.0);
  CHECK(rel_err(moment_by_quadrature(s, 2), 5.0 / 3.0) < 1e-7);
  CHECK(rel_err(moment_by_quadrature(s, 4), 25.0) < 1e-6);
  for (double a : {1.0, 2.0, 2.0 / 3.0}) CHECK_THROWS_AS((void)poly_moments({a, 0.0, 1.0}), excluded_alpha_error);
}

TEST_CASE("moment recursion") {
  const poly_coeff c{0.3, 0.7, 1.1};
  CHECK(rel_err(moment_recursion(c, 2, {1.0, 0.0}), 1.1 / (2.0 - 0.3)) < 1e-15);
  const double g = 1.7;
  const auto seq = moment_sequence({0.0, 0.0, 2.0 * g}, 6);
  CHECK(rel_err(seq[6], 15.0 * g * g * g) < 1e-14);
  const auto u = moment_sequence({-1.0, 0.0, 0.25}, 4);
  CHECK(rel_err(u[4], 1.0 / 80.0) < 1e-14);
  CHECK(rel_err(u[4], poly_moments({-1.0, 0.0, 0.25}).m4) < 1e-14);
  // Student(5): order 5 has a vanishing factor, order 6 a negative one.
  CHECK_THROWS_AS((void)moment_sequence({0.5, 0.0, 2.5}, 5), validation_error);
  CHECK_THROWS_AS((void)moment_sequence({0.5, 0.0, 2.5}, 6), validation_error);
}

TEST_CASE("measurability closed forms") {
  const std::vector<double> w{0.7};
  CHECK(mble_inner_product(mble_linear{1.0}, w) == 1.0);
  for (double c : {-0.8, 0.25, 1.5}) {
    for (double x : {-1.3, 0.0, 2.1}) {
      const std::vector<double> wx{x};
      CHECK(rel_err(mble_inner_product(mble_quadratic{c}, wx), 2.0 * c * c * x * x) < 1e-14);
    }
  }
  CHECK_THROWS_AS(validate(mble_exp_chi2{0.5, 2}), validation_error);
  CHECK_THROWS_AS((void)mble_functional(mble_exp_chi2{0.2, 2}, w), validation_error);

  // quadratic(1/2) against chaos arithmetic for F = 1/2 I_2(e1 (x) e1).
  gaussian::symmetric_kernel f(1, 2);
  f.add({0, 0}, 0.5);
  const auto F = gaussian::chaos_vector::single(f);
  const auto G = gaussian::malliavin_inner(gaussian::ou_inverse(F), F);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 1000; ++i) {
    const std::vector<double> x{nd(rng)};
    const double a = G.evaluate(x);
    const double b = mble_inner_product(mble_quadratic{0.5}, x);
    CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(b)));
  }

  // With c = 1/(2 lambda) and shape 1/2, 1/2 a(F) equals the inner product pathwise.
  for (double lambda : {0.5, 1.0, 3.0}) {
    const double c = 1.0 / (2.0 * lambda);
    const auto coeff = closed_form_coeff(named_target::make("gamma", {{"a", 0.5}, {"lambda", lambda}}));
    for (double x : {-2.0, -0.1, 0.5, 3.3}) {
      const std::vector<double> wx{x};
      const double Fv = mble_functional(mble_quadratic{c}, wx);
      CHECK(std::abs(0.5 * coeff(Fv) - mble_inner_product(mble_quadratic{c}, wx)) < 1e-12);
    }
  }

  // E<D(-L)^{-1}(F - EF), DF> = Var F, with the Gaussian expectation by quadrature.
  auto gauss_expect = [](const std::function<double(double)>& g) {
    const boost::math::normal nd01;
    return integrate([&](double z) { return g(z) * boost::math::pdf(nd01, z); }, -40.0, 40.0,
                     {1e-12, 1e-10, 4000})
        .value;
  };
  for (double c : {-0.7, 0.3, 0.9}) {
    const mble_lognormal mc{c};
    const double e = gauss_expect([&](double z) { return mble_inner_product(mc, std::vector<double>{z}); });
    CHECK(rel_err(e, mble_variance(mc)) < 1e-7);
  }
  for (double c : {-1.0, -0.5, 0.1, 0.2}) {
    const mble_exp_chi2 mc{c, 1};
    const double e = gauss_expect([&](double z) { return mble_inner_product(mc, std::vector<double>{z}); });
    CHECK(rel_err(e, mble_variance(mc)) < 1e-7);
  }
  // n = 2 by Monte Carlo.
  const mble_exp_chi2 mc{0.15, 2};
  double s = 0.0, ss = 0.0;
  const int N = 200000;
  for (int i = 0; i < N; ++i) {
    const std::vector<double> z{nd(rng), nd(rng)};
    const double v = mble_inner_product(mc, z);
    s += v;
    ss += v * v;
  }
  const double mean = s / N;
  const double se = std::sqrt((ss / N - mean * mean) / N);
  CHECK(std::abs(mean - mble_variance(mc)) < 5.0 * se);
}
