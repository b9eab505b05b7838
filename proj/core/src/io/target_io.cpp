#include "chaoskit/io/target_io.hpp"

#include <boost/math/interpolators/barycentric_rational.hpp>
#include <algorithm>
#include <cmath>
#include <memory>

#include "chaoskit/error.hpp"
#include "json_format.hpp"

namespace chaoskit::io {

using detail::json;

namespace {

// log-density: Floater-Hormann rational interpolant between the grid ends
// (smooth, so adaptive quadrature sees no kinks at the knots), continued
// linearly with matching slope outside.
struct log_density {
  std::shared_ptr<boost::math::barycentric_rational<double>> spline;
  double x0, x1, y0, y1, slope0, slope1;

  double operator()(double x) const {
    if (x < x0) return y0 + slope0 * (x - x0);
    if (x > x1) return y1 + slope1 * (x - x1);
    return (*spline)(x);
  }
};

double bound_value(const json& j, double inf, const std::string& field) {
  if (j.is_null()) return inf;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return stein::infinity;
    if (s == "-inf") return -stein::infinity;
    throw validation_error("target field '" + field + "' has an unknown bound '" + s + "'");
  }
  if (!j.is_number()) throw validation_error("target field '" + field + "' must be a number or null");
  return j.get<double>();
}

}  // namespace

loaded_target make_grid_target(std::vector<std::pair<double, double>> grid, stein::interval support,
                               std::string name) {
  if (grid.size() < 4) throw validation_error("target field 'density' needs at least 4 grid points");
  if (!(support.lower < support.upper)) throw validation_error("target field 'support' must satisfy l < u");
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto [x, p] = grid[i];
    const std::string where = "density[" + std::to_string(i) + "]";
    if (!std::isfinite(x) || !support.contains(x)) {
      throw validation_error("target field '" + where + "': x must lie inside the support");
    }
    if (!(p > 0.0) || !std::isfinite(p)) throw validation_error("target field '" + where + "': p must be positive");
    if (!xs.empty() && !(x > xs.back())) {
      throw validation_error("target field '" + where + "': x must be strictly increasing");
    }
    xs.push_back(x);
    ys.push_back(std::log(p));
  }
  const std::size_t n = xs.size();
  log_density ld;
  ld.x0 = xs.front();
  ld.x1 = xs.back();
  ld.y0 = ys.front();
  ld.y1 = ys.back();
  ld.spline = std::make_shared<boost::math::barycentric_rational<double>>(std::move(xs), std::move(ys),
                                                                         std::min<std::size_t>(3, n - 1));
  ld.slope0 = ld.spline->prime(ld.x0);
  ld.slope1 = ld.spline->prime(ld.x1);
  if (!std::isfinite(support.lower) && !(ld.slope0 > 0.0)) {
    throw validation_error("target field 'density': log-density must increase from the infinite lower end");
  }
  if (!std::isfinite(support.upper) && !(ld.slope1 < 0.0)) {
    throw validation_error("target field 'density': log-density must decrease toward the infinite upper end");
  }

  // Normalize and center.
  const stein::quadrature_options tight{1e-13, 1e-11, 4000};
  auto raw = [ld, support](double x) { return support.contains(x) ? std::exp(ld(x)) : 0.0; };
  const double split = 0.5 * (ld.x0 + ld.x1);
  auto total = [&](const stein::real_fn& f) {
    return stein::integrate(f, support.lower, split, tight).value + stein::integrate(f, split, support.upper, tight).value;
  };
  const double mass = total(raw);
  if (!(mass > 0.0) || !std::isfinite(mass)) throw validation_error("target field 'density' is not integrable");
  const double mean = total([&](double x) { return x * raw(x); }) / mass;

  stein::target_measure::definition def;
  def.name = std::move(name);
  def.support = {support.lower - mean, support.upper - mean};
  def.density = [raw, mass, mean](double x) { return raw(x + mean) / mass; };
  const double spread = std::sqrt(std::max(total([&](double x) { return (x - mean) * (x - mean) * raw(x); }) / mass, 0.0));
  def.scale = spread > 0.0 ? spread : 1.0;
  // Moments beyond the grid follow the exponential tails, so all are finite.
  loaded_target out{stein::target_measure(std::move(def)), std::nullopt, mean};
  return out;
}

loaded_target parse_target(std::string_view text) {
  const json j = detail::parse(std::string(text), "target file");
  if (!j.is_object()) throw validation_error("target file must hold one JSON object");
  if (!j.contains("name") || !j["name"].is_string()) throw validation_error("target field 'name' is missing");
  const auto name = j["name"].get<std::string>();
  if (name == "custom") {
    if (!j.contains("density") || !j["density"].is_array()) {
      throw validation_error("target field 'density' must be an array of [x, p] pairs");
    }
    if (!j.contains("support") || !j["support"].is_array() || j["support"].size() != 2) {
      throw validation_error("target field 'support' must be [l, u]");
    }
    std::vector<std::pair<double, double>> grid;
    for (std::size_t i = 0; i < j["density"].size(); ++i) {
      const auto& e = j["density"][i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw validation_error("target field 'density[" + std::to_string(i) + "]' must be a pair of numbers");
      }
      grid.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    const stein::interval support{bound_value(j["support"][0], -stein::infinity, "support[0]"),
                                  bound_value(j["support"][1], stein::infinity, "support[1]")};
    return make_grid_target(std::move(grid), support);
  }
  stein::param_map params;
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw validation_error("target field 'params' must be an object");
    for (const auto& [k, v] : j["params"].items()) {
      if (!v.is_number()) throw validation_error("target field 'params." + k + "' must be a number");
      params.emplace(k, v.get<double>());
    }
  }
  auto named = stein::named_target::make(name, params);
  return {stein::make_target(named), named, stein::uncentered_mean(named)};
}

loaded_target load_target(const std::string& path) { return parse_target(detail::read_file(path)); }

}  // namespace chaoskit::io
