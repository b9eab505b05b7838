#include "chaoskit/io/report_io.hpp"

#include "json_format.hpp"

namespace chaoskit::io {

using detail::json;

namespace {

json header(const char* command) {
  json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  return j;
}

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json coeff_json(const stein::poly_coeff& c) {
  json j;
  j["alpha"] = c.alpha;
  j["beta"] = c.beta;
  j["gamma"] = c.gamma;
  return j;
}

json params_json(const stein::param_map& p) {
  json j = json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

json classifier_json(const diagnostics::classifier_result& r) {
  json j = coeff_json(r.coeff);
  j["C0"] = opt(r.c0);
  j["delta"] = opt(r.delta);
  j["discriminant_exact"] = opt(r.discriminant_exact);
  j["roots"] = r.roots;
  json cn = json::object();
  for (const auto& [n, v] : r.c_n_table) cn["c_" + std::to_string(n)] = v;
  j["c_n"] = cn;
  j["c0_sign_argument_applies"] = r.c0_sign_argument_applies;
  json v;
  v["kind"] = std::string(diagnostics::to_string(r.verdict.kind));
  v["lambda"] = opt(r.verdict.lambda);
  v["a"] = opt(r.verdict.shape);
  v["target_reachable"] = r.verdict.target_reachable;
  v["reason"] = r.verdict.reason;
  j["verdict"] = v;
  return j;
}

json mc_json(const std::optional<diagnostics::mc_estimate>& e) {
  if (!e) return nullptr;
  json j;
  j["mean"] = e->mean;
  j["std_error"] = e->std_error;
  j["samples"] = e->samples;
  return j;
}

}  // namespace

std::string format_targets_list() {
  json j = header("targets-list");
  json list = json::array();
  for (auto name : stein::target_names()) {
    json t;
    t["name"] = std::string(name);
    json ps = json::array();
    for (auto p : stein::target_param_names(name)) ps.push_back(std::string(p));
    t["params"] = ps;
    list.push_back(t);
  }
  j["targets"] = list;
  return detail::dump(j);
}

std::string format_coeffs(const coeff_report& r) {
  json j = header("targets-coeffs");
  j["target"] = r.target;
  j["params"] = params_json(r.params);
  j["alpha"] = r.coeff.alpha;
  j["beta"] = r.coeff.beta;
  j["gamma"] = r.coeff.gamma;
  j["uncentered_mean"] = r.uncentered_mean;
  j["moment_limit"] = r.moment_limit;
  return detail::dump(j);
}

std::string format_classifier(const diagnostics::classifier_result& r) {
  json j = header("classify");
  const json body = classifier_json(r);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return detail::dump(j);
}

std::string format_diagnostics(const diagnostics::diagnostics_report& r) {
  json j = header("diagnose");
  j["family"] = r.family;
  j["order"] = r.order;
  j["target"] = r.target;
  j["coeff"] = coeff_json(r.coeff);
  j["mc_samples"] = r.mc_samples;
  j["seed"] = r.seed;
  json members = json::array();
  for (const auto& m : r.members) {
    json x;
    x["m"] = m.m;
    x["dim"] = m.dim;
    x["EF2"] = m.ef2;
    x["EF3"] = m.ef3;
    x["EF4"] = m.ef4;
    x["contraction_norms"] = m.contraction_norms;
    x["raw_contraction_norms"] = m.raw_contraction_norms;
    x["stein_residual_L2"] = m.stein_residual_l2;
    x["stein_residual_L2_subtraction"] = m.stein_residual_l2_subtraction;
    json levels = json::array();
    for (const auto& l : m.stein_residual_levels) levels.push_back(json::array({l.k, l.value}));
    x["stein_residual_levels"] = levels;
    x["stein_residual_L2_mc"] = mc_json(m.stein_residual_l2_mc);
    x["prop24_gap"] = m.prop24_gap;
    x["prop24_gap_mc"] = mc_json(m.prop24_gap_mc);
    x["gamma_kernel_gap"] = opt(m.gamma_kernel_gap);
    x["lemma_l11_gap"] = opt(m.lemma_l11_gap);
    x["lemma_l2_combination"] = opt(m.lemma_l2);
    members.push_back(x);
  }
  j["members"] = members;
  json trends = json::array();
  for (const auto& t : r.trends) {
    json x;
    x["quantity"] = t.quantity;
    x["m"] = t.m;
    x["ratio_m_over_2m"] = t.ratio;
    trends.push_back(x);
  }
  j["trends"] = trends;
  j["classifier"] = classifier_json(r.classifier);
  return detail::dump(j);
}

namespace {

json config_json(const sim_report& r) {
  json c;
  c["target"] = r.target;
  c["dt"] = r.config.dt;
  c["burn_in"] = r.config.burn_in;
  c["samples"] = r.config.samples;
  c["thinning"] = r.config.thinning;
  c["seed"] = r.config.seed;
  c["boundary_epsilon"] = r.config.boundary_epsilon;
  return c;
}

}  // namespace

std::string format_simulation(const sim_report& r) {
  json j = header("simulate");
  j["config"] = config_json(r);
  j["count"] = r.count;
  j["ks_distance"] = r.ks;
  j["mean"] = r.mean;
  j["mean_std_error"] = r.mean_std_error;
  j["clamp_fraction"] = r.clamp_fraction;
  j["clamp_flag"] = r.clamp_flag;
  json dict = json::array();
  bool pass = true;
  for (const auto& [name, e] : r.dictionary) {
    json x;
    x["h"] = name;
    x["mean"] = e.mean;
    x["std_error"] = e.std_error;
    x["z"] = e.z();
    dict.push_back(x);
    pass = pass && e.z() < r.z_threshold;
  }
  j["stein_dictionary"] = dict;
  j["stein_dictionary_pass"] = pass;
  j["samples_path"] = r.samples_path.empty() ? json(nullptr) : json(r.samples_path);
  return detail::dump(j);
}

std::string format_sample_dump(const sim_report& r, const std::vector<double>& chain) {
  std::string out;
  const std::string cfg = detail::dump(config_json(r));
  std::size_t start = 0;
  while (start < cfg.size()) {
    const auto end = cfg.find('\n', start);
    out += "# " + cfg.substr(start, end - start) + "\n";
    start = end + 1;
  }
  for (double v : chain) out += detail::format_double(v) + "\n";
  return out;
}

std::string format_stein_check(const stein_check_report& r) {
  json j = header("stein-check");
  j["target"] = r.target;
  j["coeff"] = r.coeff ? coeff_json(*r.coeff) : json(nullptr);
  j["coeff_max_rel_err"] = r.coeff_max_rel_err;
  j["tolerance"] = r.tolerance;
  json ms = json::array();
  for (const auto& m : r.moments) {
    json x;
    x["order"] = m.order;
    x["recursion"] = m.recursion;
    x["quadrature"] = m.quadrature;
    x["identity_residual"] = m.identity_residual;
    ms.push_back(x);
  }
  j["moments"] = ms;
  json ss = json::array();
  for (const auto& s : r.solutions) {
    json x;
    x["f"] = s.f;
    x["max_residual"] = s.max_residual;
    ss.push_back(x);
  }
  j["stein_solutions"] = ss;
  j["passed"] = r.passed;
  return detail::dump(j);
}

std::string format_oracle_check(const std::vector<check_row>& rows) {
  json j = header("oracle-check");
  std::size_t passed = 0;
  json list = json::array();
  for (const auto& r : rows) {
    passed += r.passed ? 1 : 0;
    json x;
    x["name"] = r.name;
    x["passed"] = r.passed;
    x["detail"] = r.detail;
    list.push_back(x);
  }
  j["passed"] = passed;
  j["failed"] = rows.size() - passed;
  j["checks"] = list;
  return detail::dump(j);
}

void write_text(const std::string& path, const std::string& text) { detail::write_file(path, text); }

}  // namespace chaoskit::io
