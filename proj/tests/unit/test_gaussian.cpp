#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "chaoskit/error.hpp"
#include "chaoskit/gaussian/chaos_vector.hpp"
#include "chaoskit/gaussian/contraction.hpp"
#include "chaoskit/gaussian/hermite.hpp"
#include "chaoskit/gaussian/multi_index.hpp"
#include "chaoskit/gaussian/sampling.hpp"
#include "chaoskit/gaussian/sparse_tensor.hpp"
#include "chaoskit/gaussian/symmetric_kernel.hpp"
#include "chaoskit/gaussian/wick.hpp"
#include "poly_oracle.hpp"
#include "random_kernels.hpp"

using namespace chaoskit;
using namespace chaoskit::gaussian;
using testing_support::random_kernel;
using testing_support::rel_err;

namespace {

symmetric_kernel e(std::size_t dim, multi_index idx, double w = 1.0) {
  symmetric_kernel f(dim, static_cast<unsigned>(idx.size()));
  f.add(idx, w);
  return f;
}

std::vector<double> gauss_point(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> n;
  std::vector<double> x(d);
  for (auto& v : x) v = n(rng);
  return x;
}

}  // namespace

TEST_CASE("hermite values") {
  CHECK(hermite(0, 3.7) == 1.0);
  CHECK(hermite(2, 2.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(hermite(4, 1.0) == doctest::Approx(-1.0 / 12.0).epsilon(1e-15));
  // n! H_n agrees with the probabilists' polynomial expanded independently.
  for (unsigned n = 0; n <= 8; ++n) {
    const auto c = oracle::he_coefficients(n);
    for (double x : {-2.5, -0.3, 0.0, 1.1, 3.0}) {
      double he = 0.0;
      for (std::size_t p = 0; p < c.size(); ++p) he += c[p] * std::pow(x, p);
      CHECK(rel_err(factorial(n) * hermite(n, x), he) < 1e-12);
    }
  }
}

TEST_CASE("multi-index helpers") {
  CHECK(orbit_size(multi_index{0, 0, 1}) == 3.0);
  CHECK(orbit_size(multi_index{0, 1, 2}) == 6.0);
  CHECK(orbit_size(multi_index{}) == 1.0);
  CHECK(binomial(5, 2) == 10.0);
  CHECK(factorial(5) == 120.0);
}

TEST_CASE("kernel invariants") {
  symmetric_kernel f(3, 2);
  CHECK_THROWS_AS(f.add({2, 1}, 1.0), validation_error);
  CHECK_THROWS_AS(f.add({0, 3}, 1.0), validation_error);
  CHECK_THROWS_AS(f.add({0}, 1.0), validation_error);
  f.add({0, 1}, 0.5);
  CHECK(f.norm_squared() == doctest::Approx(0.5));
  CHECK(f.at(std::vector<index_t>{1, 0}) == 0.5);
  const auto s = symmetric_kernel::scalar(3, 2.5);
  CHECK(s.order() == 0);
  CHECK(s.norm_squared() == doctest::Approx(6.25));
}

TEST_CASE("multiple integral evaluation") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto x = gauss_point(rng, 3);
    CHECK(rel_err(eval_multiple_integral(e(3, {0, 0}), x), x[0] * x[0] - 1.0) < 1e-14);
    CHECK(rel_err(eval_multiple_integral(e(3, {0}), x), x[0]) < 1e-14);
    CHECK(rel_err(eval_multiple_integral(symmetric_kernel::elementary(3, {0, 0, 1}), x), (x[0] * x[0] - 1.0) * x[1]) <
          1e-14);
  }
  const std::vector<double> short_x{1.0};
  CHECK_THROWS_AS((void)eval_multiple_integral(e(3, {0}), short_x), validation_error);
  // E[I_3(f)^2] = 3! ||f||^2 for the elementary kernel.
  const auto f = symmetric_kernel::elementary(3, {0, 0, 1});
  CHECK(f.norm_squared() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  const auto F = chaos_vector::single(f);
  CHECK(rel_err(oracle::moment({F}, {2}), 6.0 * f.norm_squared()) < 1e-12);
}

TEST_CASE("contractions") {
  const auto c = contract(e(2, {0, 0}), symmetric_kernel::elementary(2, {0, 1}), 1);
  CHECK(c.order() == 2);
  CHECK(c.at({0, 1}) == doctest::Approx(0.5));  // f(0,1) of the symmetric e1 (x) e2 kernel
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto f = random_kernel(rng, 4, 3);
    const auto full = contract(f, f, 3);
    CHECK(full.order() == 0);
    CHECK(rel_err(full.at({}), f.norm_squared()) < 1e-13);
  }
  symmetric_kernel g(2, 2);
  g.add({0, 0}, 1.0 / std::sqrt(2.0));
  g.add({1, 1}, 1.0 / std::sqrt(2.0));
  const auto gg = contract_symmetrized(g, g, 1);
  CHECK(gg.at(std::vector<index_t>{0, 0}) == doctest::Approx(0.5));
  CHECK(gg.at(std::vector<index_t>{1, 1}) == doctest::Approx(0.5));
  CHECK(gg.norm_squared() == doctest::Approx(0.5));
  CHECK_THROWS_AS((void)contract(g, g, 3), validation_error);
  CHECK_THROWS_AS((void)contract(g, e(3, {0, 0}), 1), validation_error);
}

TEST_CASE("contraction fast path matches symmetrized ordered contraction") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const unsigned n = 1 + t % 4;
    const unsigned m = 1 + (t / 4) % 4;
    const auto f = random_kernel(rng, 4, n);
    const auto g = random_kernel(rng, 4, m);
    for (unsigned r = 0; r <= std::min(n, m); ++r) {
      const auto raw = contract(f, g, r);
      const auto a = symmetrize(raw);
      const auto b = contract_symmetrized(f, g, r);
      CHECK((a - b).norm() < 1e-12 * std::max(1.0, a.norm()));
      CHECK(rel_err(raw.norm_squared(), contraction_norm_squared(f, g, r)) < 1e-12);
    }
  }
}

TEST_CASE("symmetrization") {
  sparse_tensor t(2, 2);
  t.add({0, 1}, 1.0);
  const auto s = symmetrize(t);
  CHECK(s.at(std::vector<index_t>{0, 1}) == doctest::Approx(0.5));
  CHECK(s.norm_squared() == doctest::Approx(0.5));
  std::mt19937_64 rng(9);
  for (int k = 0; k < 20; ++k) {
    sparse_tensor raw(3, 3);
    std::uniform_int_distribution<index_t> pick(0, 2);
    std::uniform_real_distribution<double> val(-1, 1);
    for (int j = 0; j < 5; ++j) raw.add({pick(rng), pick(rng), pick(rng)}, val(rng));
    const auto once = symmetrize(raw);
    const auto twice = symmetrize(sparse_tensor::expand(once));
    CHECK((once - twice).norm() < 1e-14);
    CHECK(once.norm_squared() <= raw.norm_squared() + 1e-14);
  }
}

TEST_CASE("product formula") {
  const auto x1 = chaos_vector::single(e(2, {0}));
  const auto sq = chaos_product(x1, x1);
  CHECK(sq.level(2).at(std::vector<index_t>{0, 0}) == doctest::Approx(1.0));
  CHECK(sq.expectation() == doctest::Approx(1.0));

  const auto F = chaos_vector::single(e(2, {0, 0}));
  const auto F2 = chaos_product(F, F);
  CHECK(F2.level(4).at(std::vector<index_t>{0, 0, 0, 0}) == doctest::Approx(1.0));
  CHECK(F2.level(2).at(std::vector<index_t>{0, 0}) == doctest::Approx(4.0));
  CHECK(F2.expectation() == doctest::Approx(2.0));

  const auto x2 = chaos_vector::single(e(2, {1}));
  const auto mixed = chaos_product(x1, x2);
  CHECK(mixed.level(2).at(std::vector<index_t>{0, 1}) == doctest::Approx(0.5));
  CHECK(mixed.expectation() == 0.0);

  std::mt19937_64 rng(21);
  for (int t = 0; t < 25; ++t) {
    chaos_vector A(4);
    chaos_vector B(4);
    for (unsigned k = 1; k <= 3; ++k) {
      A.add(random_kernel(rng, 4, k));
      B.add(random_kernel(rng, 4, k));
    }
    const auto AB = chaos_product(A, B);
    for (int s = 0; s < 40; ++s) {
      const auto x = gauss_point(rng, 4);
      const double lhs = AB.evaluate(x);
      const double rhs = A.evaluate(x) * B.evaluate(x);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("malliavin inner products") {
  const auto x1 = chaos_vector::single(e(2, {0}));
  const auto one = malliavin_inner(x1, x1);
  CHECK(one.expectation() == doctest::Approx(1.0));
  CHECK(one.max_level() == 0);

  const auto F = chaos_vector::single(e(2, {0, 0}));
  const auto d = malliavin_inner(F, F);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const auto x = gauss_point(rng, 2);
    CHECK(rel_err(d.evaluate(x), 4.0 * x[0] * x[0]) < 1e-12);
  }
  const auto x2 = chaos_vector::single(e(2, {1}));
  const auto zero = malliavin_inner(x1, x2);
  for (const auto& [k, g] : zero.levels()) CHECK(g.norm() == 0.0);

  // Pathwise n^2 sum_i I_{n-1}(f(., i))^2 for random kernels.
  for (int t = 0; t < 10; ++t) {
    const unsigned n = 1 + t % 4;
    const auto f = random_kernel(rng, 3, n);
    const auto G = malliavin_inner(chaos_vector::single(f), chaos_vector::single(f));
    const auto parts = malliavin_gradient_kernels(f);
    for (int s = 0; s < 30; ++s) {
      const auto x = gauss_point(rng, 3);
      double direct = 0.0;
      for (const auto& p : parts) {
        const double v = eval_multiple_integral(p, x);
        direct += v * v;
      }
      direct *= n * n;
      CHECK(std::abs(G.evaluate(x) - direct) <= 1e-10 * std::max(1.0, direct));
    }
  }
}

TEST_CASE("ou inverse") {
  const auto f = e(2, {0, 1}, 0.7);
  const auto F = chaos_vector::single(f);
  CHECK((ou_inverse(F).level(2) - 0.5 * f).norm() < 1e-15);
  chaos_vector G(2);
  G.add(e(2, {0}));
  G.add(e(2, {0, 0}));
  const auto inv = ou_inverse(G);
  CHECK(inv.level(1).at(std::vector<index_t>{0}) == 1.0);
  CHECK(inv.level(2).at(std::vector<index_t>{0, 0}) == 0.5);
  CHECK_THROWS_AS((void)ou_inverse(chaos_vector::constant(2, 1.0)), validation_error);
  // <D(-L)^{-1}F, DF> = n^{-1} ||DF||^2 for F = I_n(f).
  std::mt19937_64 rng(8);
  for (unsigned n = 1; n <= 4; ++n) {
    const auto H = chaos_vector::single(random_kernel(rng, 3, n));
    const auto lhs = malliavin_inner(ou_inverse(H), H);
    const auto rhs = (1.0 / n) * malliavin_inner(H, H);
    const auto diff = lhs - rhs;
    CHECK(diff.second_moment() < 1e-24 * std::max(1.0, rhs.second_moment()));
  }
}

TEST_CASE("wick moments") {
  const auto x1 = chaos_vector::single(e(2, {0}));
  CHECK(wick_moment(x1, 2) == doctest::Approx(1.0));
  const auto F = chaos_vector::single(e(2, {0, 0}));
  CHECK(wick_moment(F, 3) == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(wick_moment(F, 4) == doctest::Approx(60.0).epsilon(1e-14));
  CHECK_THROWS_AS((void)wick_moment(x1, 13), guard_exceeded_error);

  // Isometry and orthogonality on random kernels, against the polynomial oracle too.
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const unsigned n = 1 + t % 4;
    const unsigned m = 1 + (t / 4) % 4;
    const auto f = random_kernel(rng, 4, n);
    const auto g = random_kernel(rng, 4, m);
    const std::vector<chaos_vector> fg{chaos_vector::single(f), chaos_vector::single(g)};
    const std::vector<unsigned> pw{1, 1};
    const double w = wick_moment(fg, pw);
    const double expect = n == m ? factorial(n) * inner(f, g) : 0.0;
    CHECK(std::abs(w - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
    CHECK(std::abs(oracle::moment(fg, pw) - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
  }
  for (int t = 0; t < 30; ++t) {
    const unsigned n = 1 + t % 3;
    const auto f = random_kernel(rng, 3, n, 3);
    const auto F4 = chaos_vector::single(f);
    for (unsigned p : {3u, 4u}) {
      const double a = wick_moment(F4, p);
      const double b = oracle::moment({F4}, {p});
      CHECK(rel_err(a, b) < 1e-10);
    }
  }
}

TEST_CASE("gaussian sampling") {
  const std::size_t N = 1000000;
  gaussian_stream s(2, 42, N);
  std::vector<double> x(2);
  double sum0 = 0.0, sq0 = 0.0, sum1 = 0.0;
  while (s.next(x)) {
    sum0 += x[0];
    sq0 += x[0] * x[0];
    sum1 += x[1];
  }
  CHECK(std::abs(sum0 / N) < 4.0 / std::sqrt(double(N)));
  CHECK(std::abs(sum1 / N) < 4.0 / std::sqrt(double(N)));
  CHECK(std::abs(sq0 / N - 1.0) < 0.01);
  const auto a = sample_gaussian(3, 7, 10000);
  const auto b = sample_gaussian(3, 7, 10000);
  CHECK(a == b);
  const auto c = sample_gaussian(3, 8, 10000);
  CHECK(a != c);
  // A stream and a prefix of a longer stream agree under the chunking contract.
  const auto shorter = sample_gaussian(3, 7, 5000);
  CHECK(std::equal(shorter.begin(), shorter.end(), a.begin()));
}
