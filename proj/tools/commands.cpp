#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <random>

#include "chaoskit/diagnostics/chaos_moments.hpp"
#include "chaoskit/diagnostics/classifier.hpp"
#include "chaoskit/diagnostics/family_report.hpp"
#include "chaoskit/diagnostics/kernel_family.hpp"
#include "chaoskit/error.hpp"
#include "chaoskit/gaussian/chaos_vector.hpp"
#include "chaoskit/gaussian/sampling.hpp"
#include "chaoskit/gaussian/wick.hpp"
#include "chaoskit/io/kernel_io.hpp"
#include "chaoskit/io/report_io.hpp"
#include "chaoskit/io/target_io.hpp"
#include "chaoskit/sim/empirical.hpp"
#include "chaoskit/sim/simulate.hpp"
#include "chaoskit/stein/moments.hpp"
#include "chaoskit/stein/named_targets.hpp"
#include "chaoskit/stein/stein_solution.hpp"

namespace chaoskit::cli {

namespace {

using stein::poly_coeff;

void emit(const std::string& text, const output_flags& out) {
  if (out.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    io::write_text(out.out, text);
  }
}

const std::optional<double>* flag_slot(const target_flags& t, std::string_view key) {
  if (key == "nu") return &t.nu;
  if (key == "a") return &t.a;
  if (key == "b") return &t.b;
  if (key == "lambda") return &t.lambda;
  if (key == "gamma") return &t.gamma;
  if (key == "delta") return &t.delta;
  return nullptr;
}

constexpr std::string_view all_param_flags[] = {"nu", "a", "b", "lambda", "gamma", "delta"};

bool has_target(const target_flags& t) { return !t.name.empty() || !t.file.empty(); }

// --name plus the parameter flags it needs; stray parameter flags are errors.
stein::named_target named_from_flags(const target_flags& t) {
  if (t.name.empty()) throw validation_error("--name is required");
  const auto& names = stein::target_names();
  if (std::find(names.begin(), names.end(), t.name) == names.end()) {
    throw validation_error("--name: unknown target '" + t.name + "' (see targets-list)");
  }
  const auto wanted = stein::target_param_names(t.name);
  stein::param_map params;
  for (auto key : all_param_flags) {
    const auto& slot = *flag_slot(t, key);
    const bool needed = std::find(wanted.begin(), wanted.end(), key) != wanted.end();
    if (needed && !slot) throw validation_error("--" + std::string(key) + " is required for target '" + t.name + "'");
    if (!needed && slot) throw validation_error("--" + std::string(key) + " does not apply to target '" + t.name + "'");
    if (slot) params.emplace(std::string(key), *slot);
  }
  return stein::named_target::make(t.name, params);
}

io::loaded_target load_any(const target_flags& t) {
  if (!t.file.empty()) {
    if (!t.name.empty()) throw validation_error("--name and --target-file are mutually exclusive");
    return io::load_target(t.file);
  }
  const auto named = named_from_flags(t);
  return {stein::make_target(named), named, stein::uncentered_mean(named)};
}

struct resolved_coeff {
  std::string label;
  poly_coeff coeff;
};

// A named target (with closed form) or the raw --alpha/--beta/--gamma triple.
resolved_coeff coeff_from_flags(const target_flags& t, const coeff_flags& c) {
  if (has_target(t)) {
    if (c.alpha || c.beta) throw validation_error("--alpha/--beta cannot be combined with a named target");
    const auto lt = load_any(t);
    if (!lt.named) throw validation_error("--target-file: custom densities have no polynomial coefficient");
    return {std::string(lt.named->name()), stein::closed_form_coeff(*lt.named)};
  }
  if (!c.alpha || !c.beta || !t.gamma) {
    throw validation_error("give either --name with its parameters or all of --alpha, --beta, --gamma");
  }
  for (auto [flag, v] : {std::pair{"--alpha", *c.alpha}, {"--beta", *c.beta}, {"--gamma", *t.gamma}}) {
    if (!std::isfinite(v)) throw validation_error(std::string(flag) + " must be finite");
  }
  return {"custom", {*c.alpha, *c.beta, *t.gamma}};
}

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed, const char* why) {
  if (!seed) throw validation_error(std::string("--seed is required ") + why);
  return *seed;
}

// Finite variance of the empirical residual needs twice the identity's order.
bool residual_variance_finite(const stein::target_measure& t, const stein::test_function& h) {
  const double need = std::max(h.growth + 1.0, h.deriv_growth + stein::coeff_growth(t));
  return 2.0 * need < t.moment_limit();
}

sim::residual_estimate batch_mean(const std::vector<double>& chain, std::size_t batches = 50) {
  sim::residual_estimate out;
  const std::size_t n = chain.size();
  for (double v : chain) out.mean += v;
  out.mean /= static_cast<double>(n);
  const std::size_t len = std::max<std::size_t>(1, n / batches);
  const std::size_t used = n / len;
  double var = 0.0;
  for (std::size_t b = 0; b < used; ++b) {
    double s = 0.0;
    for (std::size_t i = b * len; i < (b + 1) * len; ++i) s += chain[i];
    const double d = s / static_cast<double>(len) - out.mean;
    var += d * d;
  }
  out.std_error = used > 1 ? std::sqrt(var / static_cast<double>(used - 1) / static_cast<double>(used)) : 0.0;
  return out;
}

gaussian::symmetric_kernel random_kernel(std::mt19937_64& rng, std::size_t dim, unsigned order) {
  gaussian::symmetric_kernel f(dim, order);
  std::uniform_int_distribution<gaussian::index_t> pick(0, static_cast<gaussian::index_t>(dim - 1));
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  const int nnz = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int e = 0; e < nnz; ++e) {
    gaussian::multi_index idx(order);
    for (auto& i : idx) i = pick(rng);
    std::sort(idx.begin(), idx.end());
    f.add(idx, val(rng));
  }
  return f;
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

int targets_list(const output_flags& out) {
  emit(io::format_targets_list(), out);
  return 0;
}

int targets_coeffs(const target_flags& t, const output_flags& out) {
  const auto lt = load_any(t);
  if (!lt.named) throw validation_error("--target-file: custom densities have no polynomial coefficient");
  emit(io::format_coeffs({std::string(lt.named->name()), lt.named->params, stein::closed_form_coeff(*lt.named),
                          stein::uncentered_mean(*lt.named), lt.measure.moment_limit()}),
       out);
  return 0;
}

int classify(const target_flags& t, const coeff_flags& c, const output_flags& out) {
  emit(io::format_classifier(diagnostics::classify(coeff_from_flags(t, c).coeff)), out);
  return 0;
}

int diagnose(const target_flags& t, const coeff_flags& c, const diagnose_flags& d, const output_flags& out) {
  const auto rc = coeff_from_flags(t, c);
  std::optional<diagnostics::kernel_family> family;
  std::vector<unsigned> ms = d.m;
  if (d.family == "gaussian_clt") {
    family = diagnostics::kernel_family::gaussian_clt();
  } else if (d.family == "gamma_fixed") {
    if (d.k < 1) throw validation_error("--k must be at least 1");
    family = diagnostics::kernel_family::gamma_fixed(d.k);
  } else if (d.family == "explicit") {
    if (d.kernels.empty()) throw validation_error("--kernel: the explicit family needs at least one kernel file");
    std::vector<gaussian::symmetric_kernel> members;
    for (const auto& path : d.kernels) members.push_back(io::load_kernel(path));
    family = diagnostics::kernel_family::explicit_list(std::move(members));
    if (ms.empty()) {
      for (unsigned i = 1; i <= family->size(); ++i) ms.push_back(i);
    }
  } else {
    throw validation_error("--family must be one of gaussian_clt, gamma_fixed, explicit");
  }
  if (ms.empty()) throw validation_error("--m is required (comma-separated member indices)");
  for (unsigned m : ms) {
    if (m == 0) throw validation_error("--m: member indices start at 1");
  }
  const std::uint64_t seed = d.mc > 0 ? require_seed(d.seed, "when --mc is positive") : d.seed.value_or(0);
  const auto report = diagnostics::run_family_diagnostics(*family, ms, rc.label, rc.coeff, {d.mc, seed});
  emit(io::format_diagnostics(report), out);
  return 0;
}

int simulate(const target_flags& t, const simulate_flags& s, const output_flags& out) {
  const auto lt = load_any(t);
  sim::sim_config cfg;
  cfg.dt = s.dt;
  cfg.burn_in = s.burn_in;
  cfg.samples = s.samples;
  cfg.thinning = s.thinning;
  cfg.seed = require_seed(s.seed, "for simulate");
  if (s.start) cfg.start = *s.start - lt.shift;
  sim::validate(cfg, lt.measure);
  const auto result = sim::simulate(lt.measure, cfg);

  io::sim_report r;
  r.target = lt.measure.name();
  r.config = cfg;
  r.count = result.distribution.count();
  r.ks = sim::ks_distance(result.distribution, lt.measure);
  const auto m = batch_mean(result.chain);
  r.mean = m.mean;
  r.mean_std_error = m.std_error;
  r.clamp_fraction = result.clamp_fraction();
  r.clamp_flag = result.clamp_flag();
  for (const auto& h : stein::test_function::dictionary()) {
    if (!residual_variance_finite(lt.measure, h)) continue;
    r.dictionary.emplace_back(h.name, sim::stein_residual_empirical_batched(result.distribution, result.chain,
                                                                            lt.measure, h));
  }
  if (!s.samples_out.empty()) {
    r.samples_path = s.samples_out;
    io::write_text(s.samples_out, io::format_sample_dump(r, result.chain));
  }
  emit(io::format_simulation(r), out);
  return 0;
}

int stein_check(const target_flags& t, const output_flags& out) {
  const auto lt = load_any(t);
  const auto& target = lt.measure;
  io::stein_check_report r;
  r.target = target.name();
  const double tol = r.tolerance;
  bool ok = true;

  if (lt.named) {
    r.coeff = stein::closed_form_coeff(*lt.named);
    const auto numeric =
        stein::coeff_from_density([&](double x) { return target.density(x); }, {}, target.support());
    for (double x : stein::interior_grid(target, 200)) {
      const double exact = (*r.coeff)(x);
      r.coeff_max_rel_err = std::max(r.coeff_max_rel_err, std::abs(numeric(x) - exact) / std::abs(exact));
    }
    ok = ok && r.coeff_max_rel_err < tol;
  }

  std::vector<double> m{1.0, 0.0};
  for (int k = 2; k <= 8 && k < target.moment_limit(); ++k) {
    m.push_back(target.expect([k](double x) { return std::pow(x, k); }));
    io::stein_check_report::moment_row row;
    row.order = k;
    row.quadrature = m[k];
    row.recursion = std::numeric_limits<double>::quiet_NaN();
    row.identity_residual = std::numeric_limits<double>::quiet_NaN();
    if (r.coeff && !stein::is_excluded_alpha(r.coeff->alpha)) {
      try {
        row.recursion = stein::moment_recursion(*r.coeff, k, std::vector<double>(m.begin(), m.begin() + k));
        ok = ok && rel_err(row.recursion, row.quadrature) < tol;
      } catch (const validation_error&) {
        // Leading factor vanishes: the recursion does not determine this order.
      }
    }
    try {
      row.identity_residual = stein::stein_identity_residual(target, stein::test_function::monomial(k - 1));
      ok = ok && std::abs(row.identity_residual) < tol * std::max(1.0, std::abs(m[k]));
    } catch (const validation_error&) {
      // x^{k-1} is not integrable enough for this target.
    }
    r.moments.push_back(row);
  }

  const std::vector<std::pair<std::string, stein::real_fn>> fs{{"x", [](double x) { return x; }},
                                                                 {"x^2", [](double x) { return x * x; }}};
  for (const auto& [label, f] : fs) {
    if (label == "x^2" && !(target.moment_limit() > 2.0)) continue;
    const stein::stein_solution g(target, f);
    double worst = 0.0;
    for (double x : stein::interior_grid(target, 50)) worst = std::max(worst, std::abs(g.residual(x)));
    r.solutions.push_back({label, worst});
    ok = ok && worst < tol;
  }
  r.passed = ok;
  emit(io::format_stein_check(r), out);
  return ok ? 0 : 1;
}

int oracle_check(const oracle_flags& o, const output_flags& out) {
  const std::uint64_t seed = require_seed(o.seed, "for oracle-check");
  if (o.kernels == 0) throw validation_error("--kernels must be positive");
  std::mt19937_64 rng(seed);
  double m3 = 0.0, m4 = 0.0, m2 = 0.0, mixed = 0.0, prod = 0.0, malliavin = 0.0, path = 0.0;
  for (std::size_t t = 0; t < o.kernels; ++t) {
    const unsigned n = 1 + t % 4;
    const std::size_t d = 1 + (t / 4) % 6;
    const auto f = random_kernel(rng, d, n);
    const auto F = gaussian::chaos_vector::single(f);
    m2 = std::max(m2, rel_err(diagnostics::moment2(f), gaussian::wick_moment(F, 2)));
    m3 = std::max(m3, rel_err(diagnostics::moment3(f), gaussian::wick_moment(F, 3)));
    m4 = std::max(m4, rel_err(diagnostics::moment4(f), gaussian::wick_moment(F, 4)));
    malliavin = std::max(malliavin, rel_err(gaussian::malliavin_inner(F, F).expectation(), n * diagnostics::moment2(f)));

    const auto G = gaussian::chaos_vector::single(random_kernel(rng, d, 1 + (t / 2) % 3));
    const auto FG = gaussian::chaos_product(F, G);
    const std::vector<gaussian::chaos_vector> pair{F, G};
    const std::vector<unsigned> ones{1, 1}, twos{2, 2};
    mixed = std::max(mixed, rel_err(FG.expectation(), gaussian::wick_moment(pair, ones)));
    prod = std::max(prod, rel_err(FG.second_moment(), gaussian::wick_moment(pair, twos)));
    for (const auto& x : gaussian::sample_gaussian(d, seed + t, 20)) {
      path = std::max(path, rel_err(FG.evaluate(x), F.evaluate(x) * G.evaluate(x)));
    }
  }
  const double tol = 1e-10;
  const std::string suffix = " over " + std::to_string(o.kernels) + " random kernels";
  std::vector<io::check_row> rows{
      {"moment2_vs_wick", m2 < tol, "max rel err " + sci(m2) + suffix},
      {"moment3_vs_wick", m3 < tol, "max rel err " + sci(m3) + suffix},
      {"moment4_vs_wick", m4 < tol, "max rel err " + sci(m4) + suffix},
      {"product_mean_vs_wick", mixed < tol, "max rel err " + sci(mixed) + suffix},
      {"product_second_moment_vs_wick", prod < tol, "max rel err " + sci(prod) + suffix},
      {"malliavin_mean", malliavin < tol, "E<DF,DF> = n E F^2, max rel err " + sci(malliavin)},
      {"product_pathwise", path < tol, "max rel err " + sci(path) + " at 20 points per pair"},
  };
  emit(io::format_oracle_check(rows), out);
  return std::all_of(rows.begin(), rows.end(), [](const io::check_row& r) { return r.passed; }) ? 0 : 1;
}

}  // namespace chaoskit::cli
