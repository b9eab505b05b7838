#include "chaoskit/diagnostics/family_report.hpp"

#include <algorithm>
#include <random>

#include "chaoskit/diagnostics/chaos_moments.hpp"
#include "chaoskit/error.hpp"
#include "chaoskit/stein/moments.hpp"

namespace chaoskit::diagnostics {

namespace {

std::uint64_t member_seed(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), 0x6d656d62u};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

void add_trend(diagnostics_report& rep, const std::string& name, double (*pick)(const member_record&)) {
  for (const auto& a : rep.members) {
    for (const auto& b : rep.members) {
      if (b.m != 2 * a.m) continue;
      const double den = pick(b);
      if (den == 0.0) continue;
      rep.trends.push_back({name, a.m, pick(a) / den});
    }
  }
}

}  // namespace

member_record diagnose_member(const symmetric_kernel& f, unsigned m, const poly_coeff& coeff, std::size_t mc_samples,
                              std::uint64_t seed) {
  const unsigned n = f.order();
  member_record r;
  r.m = m;
  r.dim = f.dim();
  r.ef2 = moment2(f);
  r.ef3 = moment3(f);
  r.ef4 = moment4(f);
  r.contraction_norms = sym_contraction_norms(f);
  r.raw_contraction_norms = contraction_norms(f);
  const auto chaos = stein_residual_chaos(f, coeff);
  r.stein_residual_l2 = chaos.value;
  r.stein_residual_levels = chaos.levels;
  r.stein_residual_l2_subtraction = stein_residual_subtraction(f, coeff).value;
  r.prop24_gap = prop24_gap_chaos(f, coeff);
  if (mc_samples > 0) {
    r.stein_residual_l2_mc = stein_residual_mc(f, coeff, mc_samples, seed);
    r.prop24_gap_mc = prop24_gap_mc(f, coeff, mc_samples, seed);
  }
  if (n % 2 == 0) {
    if (coeff.beta != 0.0) r.gamma_kernel_gap = gamma_kernel_gap(f, 2.0 / coeff.beta);
    if (!stein::is_excluded_alpha(coeff.alpha)) r.lemma_l11_gap = lemma_l11_gap(f, coeff);
  }
  if (!stein::is_excluded_alpha(coeff.alpha)) r.lemma_l2 = lemma_l2_combination(f, coeff);
  return r;
}

diagnostics_report run_family_diagnostics(const kernel_family& family, const std::vector<unsigned>& ms,
                                          const std::string& target_name, const poly_coeff& coeff,
                                          const family_options& opts) {
  if (ms.empty()) throw validation_error("--m: at least one member index is required");
  stein::require_admissible_alpha(coeff.alpha);
  diagnostics_report rep;
  rep.family = family.name();
  rep.order = family.order();
  rep.target = target_name;
  rep.coeff = coeff;
  rep.mc_samples = opts.mc_samples;
  rep.seed = opts.seed;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    rep.members.push_back(
        diagnose_member(family.member(ms[i]), ms[i], coeff, opts.mc_samples, member_seed(opts.seed, i)));
  }
  add_trend(rep, "ef4_excess", [](const member_record& r) { return r.ef4 - 3.0 * r.ef2 * r.ef2; });
  add_trend(rep, "stein_residual_l2", [](const member_record& r) { return r.stein_residual_l2; });
  add_trend(rep, "prop24_gap", [](const member_record& r) { return r.prop24_gap; });
  add_trend(rep, "contraction_norm_sq_p1", [](const member_record& r) {
    return r.raw_contraction_norms.empty() ? 0.0 : r.raw_contraction_norms[0] * r.raw_contraction_norms[0];
  });
  rep.classifier = classify(coeff);
  return rep;
}

}  // namespace chaoskit::diagnostics
