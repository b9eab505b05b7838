#include "chaoskit/stein/mble.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "chaoskit/error.hpp"
#include "chaoskit/stein/quadrature.hpp"

namespace chaoskit::stein {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_size(const mble_case& mc, std::span<const double> w) {
  if (w.size() != static_cast<std::size_t>(mble_arity(mc))) {
    throw validation_error("mble realization has " + std::to_string(w.size()) + " coordinates, expected " +
                           std::to_string(mble_arity(mc)));
  }
}

const quadrature_options v_opts{1e-13, 1e-11, 2000};

}  // namespace

void validate(const mble_case& mc) {
  std::visit(overloaded{
                 [](const mble_linear& m) {
                   if (!std::isfinite(m.c)) throw validation_error("mble linear: c must be finite");
                 },
                 [](const mble_quadratic& m) {
                   if (!std::isfinite(m.c)) throw validation_error("mble quadratic: c must be finite");
                 },
                 [](const mble_lognormal& m) {
                   if (!std::isfinite(m.c)) throw validation_error("mble lognormal: c must be finite");
                 },
                 [](const mble_exp_chi2& m) {
                   if (!(m.c < 0.5)) throw validation_error("mble exp_chi2: c must be < 1/2");
                   if (m.n < 1) throw validation_error("mble exp_chi2: n must be >= 1");
                 },
             },
             mc);
}

int mble_arity(const mble_case& mc) {
  if (const auto* e = std::get_if<mble_exp_chi2>(&mc)) return e->n;
  return 1;
}

double mble_functional(const mble_case& mc, std::span<const double> w) {
  validate(mc);
  require_size(mc, w);
  return std::visit(overloaded{
                        [&](const mble_linear& m) { return m.c * w[0]; },
                        [&](const mble_quadratic& m) { return m.c * (w[0] * w[0] - 1.0); },
                        [&](const mble_lognormal& m) { return std::exp(m.c * w[0]); },
                        [&](const mble_exp_chi2& m) {
                          double s = 0.0;
                          for (double x : w) s += x * x;
                          return std::exp(m.c * s);
                        },
                    },
                    mc);
}

double mble_mean(const mble_case& mc) {
  validate(mc);
  return std::visit(overloaded{
                        [](const mble_linear&) { return 0.0; },
                        [](const mble_quadratic&) { return 0.0; },
                        [](const mble_lognormal& m) { return std::exp(0.5 * m.c * m.c); },
                        [](const mble_exp_chi2& m) { return std::pow(1.0 - 2.0 * m.c, -0.5 * m.n); },
                    },
                    mc);
}

double mble_variance(const mble_case& mc) {
  validate(mc);
  return std::visit(overloaded{
                        [](const mble_linear& m) { return m.c * m.c; },
                        [](const mble_quadratic& m) { return 2.0 * m.c * m.c; },
                        [](const mble_lognormal& m) {
                          const double s = m.c * m.c;
                          return std::exp(s) * std::expm1(s);
                        },
                        [](const mble_exp_chi2& m) {
                          if (!(m.c < 0.25)) return std::numeric_limits<double>::infinity();
                          return std::pow(1.0 - 4.0 * m.c, -0.5 * m.n) - std::pow(1.0 - 2.0 * m.c, -1.0 * m.n);
                        },
                    },
                    mc);
}

double mble_inner_product(const mble_case& mc, std::span<const double> w) {
  const double F = mble_functional(mc, w);
  return std::visit(overloaded{
                        [](const mble_linear& m) { return m.c * m.c; },
                        [&](const mble_quadratic& m) { return 2.0 * m.c * F + 2.0 * m.c * m.c; },
                        [&](const mble_lognormal& m) {
                          const double c2 = m.c * m.c;
                          const double v = integrate(
                              [&](double s) { return std::pow(F, s) * std::exp(0.5 * c2 * (1.0 - s * s)); }, 0.0, 1.0,
                              v_opts).value;
                          return c2 * F * v;
                        },
                        [&](const mble_exp_chi2& m) {
                          if (m.c == 0.0) return 0.0;
                          // log F directly: F itself underflows for large |w| when c < 0.
                          double logF = 0.0;
                          for (double x : w) logF += x * x;
                          logF *= m.c;
                          const double v = integrate(
                              [&](double s) {
                                const double q = 1.0 - 2.0 * m.c * (1.0 - s * s);
                                return s * std::exp(s * s / q * logF) / std::pow(q, 0.5 * m.n + 1.0);
                              },
                              0.0, 1.0, v_opts).value;
                          return F == 0.0 ? 0.0 : 4.0 * m.c * F * logF * v;
                        },
                    },
                    mc);
}

}  // namespace chaoskit::stein
