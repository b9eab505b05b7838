#include "chaoskit/stein/named_targets.hpp"

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/inverse_gamma.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/pareto.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <boost/math/distributions/uniform.hpp>
#include <cmath>
#include <memory>
#include <string>

#include "chaoskit/error.hpp"

namespace chaoskit::stein {

namespace {

struct kind_info {
  target_kind kind;
  std::string_view name;
  std::vector<std::string_view> params;
};

const std::vector<kind_info>& registry() {
  static const std::vector<kind_info> table = {
      {target_kind::normal, "normal", {"gamma"}},
      {target_kind::student, "student", {"nu"}},
      {target_kind::pareto, "pareto", {"nu"}},
      {target_kind::gamma, "gamma", {"a", "lambda"}},
      {target_kind::inverse_gamma, "inverse_gamma", {"delta", "lambda"}},
      {target_kind::f_dist, "f", {"a", "b"}},
      {target_kind::uniform_centered, "uniform", {}},
      {target_kind::beta, "beta", {"a", "b"}},
  };
  return table;
}

const kind_info& info_of(target_kind k) {
  for (const auto& i : registry()) {
    if (i.kind == k) return i;
  }
  throw validation_error("unknown target kind");
}

void require(bool ok, std::string_view target, std::string_view param, std::string_view rule) {
  if (!ok) {
    throw validation_error("target '" + std::string(target) + "': parameter '" + std::string(param) + "' must satisfy " +
                           std::string(rule));
  }
}

// Wraps a boost distribution shifted by its mean into a centered measure.
template <class Dist>
target_measure centered(std::string name, std::shared_ptr<const Dist> dist, double shift, interval support,
                        poly_coeff coeff, double moment_limit, double scale) {
  target_measure::definition def;
  def.name = std::move(name);
  def.support = support;
  def.density = [dist, shift, support](double x) {
    return support.contains(x) ? boost::math::pdf(*dist, x + shift) : 0.0;
  };
  def.cdf = [dist, shift, support](double x) {
    if (x <= support.lower) return 0.0;
    if (x >= support.upper) return 1.0;
    return boost::math::cdf(*dist, x + shift);
  };
  def.quantile = [dist, shift](double u) { return boost::math::quantile(*dist, u) - shift; };
  def.coeff = diffusion_coefficient::polynomial(coeff);
  def.moment_limit = moment_limit;
  def.scale = scale;
  return target_measure(std::move(def));
}

double spread(const poly_coeff& c) {
  // sqrt(E X^2) when finite, else a unit scale.
  const double v = c.gamma / (2.0 - c.alpha);
  return std::isfinite(v) && v > 0.0 && c.alpha < 1.0 ? std::sqrt(v) : 1.0;
}

}  // namespace

named_target named_target::make(std::string_view name, const param_map& params) {
  const kind_info* found = nullptr;
  for (const auto& i : registry()) {
    if (i.name == name) found = &i;
  }
  if (!found) throw validation_error("unknown target name '" + std::string(name) + "'");
  named_target t{found->kind, {}};
  for (auto p : found->params) {
    const auto it = params.find(p);
    if (it == params.end()) {
      throw validation_error("target '" + std::string(name) + "' requires parameter '" + std::string(p) + "'");
    }
    if (!std::isfinite(it->second)) {
      throw validation_error("target '" + std::string(name) + "': parameter '" + std::string(p) + "' must be finite");
    }
    t.params.emplace(std::string(p), it->second);
  }
  for (const auto& [k, v] : params) {
    bool known = false;
    for (auto p : found->params) known = known || p == k;
    if (!known) throw validation_error("target '" + std::string(name) + "' has no parameter '" + k + "'");
  }
  switch (t.kind) {
    case target_kind::normal:
      require(t.param("gamma") > 0, name, "gamma", "gamma > 0");
      break;
    case target_kind::student:
    case target_kind::pareto:
      require(t.param("nu") > 1, name, "nu", "nu > 1");
      break;
    case target_kind::gamma:
      require(t.param("a") > 0, name, "a", "a > 0");
      require(t.param("lambda") > 0, name, "lambda", "lambda > 0");
      break;
    case target_kind::inverse_gamma:
      require(t.param("delta") > 0, name, "delta", "delta > 0");
      require(t.param("lambda") > 1, name, "lambda", "lambda > 1");
      break;
    case target_kind::f_dist:
      require(t.param("a") >= 2, name, "a", "a >= 2");
      require(t.param("b") > 2, name, "b", "b > 2");
      break;
    case target_kind::uniform_centered:
      break;
    case target_kind::beta:
      require(t.param("a") > 0, name, "a", "a > 0");
      require(t.param("b") > 0, name, "b", "b > 0");
      break;
  }
  return t;
}

std::string_view named_target::name() const noexcept { return info_of(kind).name; }

double named_target::param(std::string_view key) const {
  const auto it = params.find(key);
  if (it == params.end()) throw validation_error("target '" + std::string(name()) + "' has no parameter '" + std::string(key) + "'");
  return it->second;
}

const std::vector<std::string_view>& target_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& i : registry()) out.push_back(i.name);
    return out;
  }();
  return names;
}

std::vector<std::string_view> target_param_names(std::string_view name) {
  for (const auto& i : registry()) {
    if (i.name == name) return i.params;
  }
  throw validation_error("unknown target name '" + std::string(name) + "'");
}

double uncentered_mean(const named_target& t) {
  switch (t.kind) {
    case target_kind::normal:
    case target_kind::student:
      return 0.0;
    case target_kind::pareto:
      return 1.0 / (t.param("nu") - 1.0);
    case target_kind::gamma:
      return t.param("a") / t.param("lambda");
    case target_kind::inverse_gamma:
      return t.param("delta") / (t.param("lambda") - 1.0);
    case target_kind::f_dist:
      return t.param("b") / (t.param("b") - 2.0);
    case target_kind::uniform_centered:
      return 0.5;
    case target_kind::beta:
      return t.param("a") / (t.param("a") + t.param("b"));
  }
  return 0.0;
}

poly_coeff closed_form_coeff(const named_target& t) {
  switch (t.kind) {
    case target_kind::normal:
      return {0.0, 0.0, 2.0 * t.param("gamma")};
    case target_kind::student: {
      const double nu = t.param("nu");
      return {2.0 / (nu - 1.0), 0.0, 2.0 * nu / (nu - 1.0)};
    }
    case target_kind::pareto: {
      const double s = 2.0 / (t.param("nu") - 1.0);
      const double m = s / 2.0;
      return {s, s * (1.0 + 2.0 * m), s * m * (1.0 + m)};
    }
    case target_kind::gamma: {
      const double lambda = t.param("lambda");
      return {0.0, 2.0 / lambda, 2.0 * t.param("a") / (lambda * lambda)};
    }
    case target_kind::inverse_gamma: {
      const double d = t.param("delta");
      const double l1 = t.param("lambda") - 1.0;
      return {2.0 / l1, 4.0 * d / (l1 * l1), 2.0 * d * d / (l1 * l1 * l1)};
    }
    case target_kind::f_dist: {
      // Expansion of a(x) = 4/(a(b-2)) (x+m)(b + a(x+m)), m = b/(b-2).
      const double a = t.param("a");
      const double b = t.param("b");
      const double m = b / (b - 2.0);
      const double s = 4.0 / (a * (b - 2.0));
      return {4.0 / (b - 2.0), s * (b + 2.0 * a * m), s * (a * m * m + b * b / (b - 2.0))};
    }
    case target_kind::uniform_centered:
      return {-1.0, 0.0, 0.25};
    case target_kind::beta: {
      const double a = t.param("a");
      const double b = t.param("b");
      const double s = a + b;
      return {-2.0 / s, 2.0 / s * (b - a) / s, 2.0 / s * a / s * b / s};
    }
  }
  return {};
}

target_measure make_target(const named_target& t) {
  namespace bm = boost::math;
  const poly_coeff c = closed_form_coeff(t);
  const double m = uncentered_mean(t);
  const std::string name(t.name());
  const double sc = spread(c);
  switch (t.kind) {
    case target_kind::normal:
      return centered(name, std::make_shared<const bm::normal>(0.0, std::sqrt(t.param("gamma"))), 0.0,
                      {-infinity, infinity}, c, infinity, sc);
    case target_kind::student:
      return centered(name, std::make_shared<const bm::students_t>(t.param("nu")), 0.0, {-infinity, infinity}, c,
                      t.param("nu"), sc);
    case target_kind::pareto:
      // Lomax(nu) is Pareto(scale 1, shape nu) moved left by one.
      return centered(name, std::make_shared<const bm::pareto>(1.0, t.param("nu")), m + 1.0, {-m, infinity}, c,
                      t.param("nu"), sc);
    case target_kind::gamma:
      return centered(name, std::make_shared<const bm::gamma_distribution<>>(t.param("a"), 1.0 / t.param("lambda")),
                      m, {-m, infinity}, c, infinity, sc);
    case target_kind::inverse_gamma:
      return centered(name, std::make_shared<const bm::inverse_gamma>(t.param("lambda"), t.param("delta")), m,
                      {-m, infinity}, c, t.param("lambda"), sc);
    case target_kind::f_dist:
      return centered(name, std::make_shared<const bm::fisher_f>(t.param("a"), t.param("b")), m, {-m, infinity}, c,
                      t.param("b") / 2.0, sc);
    case target_kind::uniform_centered:
      return centered(name, std::make_shared<const bm::uniform>(0.0, 1.0), m, {-0.5, 0.5}, c, infinity, sc);
    case target_kind::beta:
      return centered(name, std::make_shared<const bm::beta_distribution<>>(t.param("a"), t.param("b")), m,
                      {-m, 1.0 - m}, c, infinity, sc);
  }
  throw validation_error("unknown target kind");
}

target_measure normal_target(double variance) { return make_target(named_target::make("normal", {{"gamma", variance}})); }
target_measure student_target(double nu) { return make_target(named_target::make("student", {{"nu", nu}})); }
target_measure pareto_target(double nu) { return make_target(named_target::make("pareto", {{"nu", nu}})); }
target_measure gamma_target(double shape, double rate) {
  return make_target(named_target::make("gamma", {{"a", shape}, {"lambda", rate}}));
}
target_measure inverse_gamma_target(double delta, double lambda) {
  return make_target(named_target::make("inverse_gamma", {{"delta", delta}, {"lambda", lambda}}));
}
target_measure f_target(double a, double b) { return make_target(named_target::make("f", {{"a", a}, {"b", b}})); }
target_measure uniform_target() { return make_target(named_target::make("uniform", {})); }
target_measure beta_target(double a, double b) {
  return make_target(named_target::make("beta", {{"a", a}, {"b", b}}));
}

}  // namespace chaoskit::stein
