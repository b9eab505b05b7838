#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chaoskit/diagnostics/classifier.hpp"
#include "chaoskit/diagnostics/family_report.hpp"
#include "chaoskit/sim/empirical.hpp"
#include "chaoskit/sim/simulate.hpp"
#include "chaoskit/stein/named_targets.hpp"

namespace chaoskit::io {

// Every report is one JSON object carrying "schema_version": "1" and the
// command name; floats are written with 17 significant digits.

inline constexpr const char* schema_version = "1";

[[nodiscard]] std::string format_targets_list();

struct coeff_report {
  std::string target;
  stein::param_map params;
  stein::poly_coeff coeff;
  double uncentered_mean = 0.0;
  double moment_limit = 0.0;
};
[[nodiscard]] std::string format_coeffs(const coeff_report& r);

[[nodiscard]] std::string format_classifier(const diagnostics::classifier_result& r);

[[nodiscard]] std::string format_diagnostics(const diagnostics::diagnostics_report& r);

struct sim_report {
  std::string target;
  sim::sim_config config;
  std::size_t count = 0;
  double ks = 0.0;
  double mean = 0.0;
  double mean_std_error = 0.0;
  double clamp_fraction = 0.0;
  bool clamp_flag = false;
  std::vector<std::pair<std::string, sim::residual_estimate>> dictionary;
  double z_threshold = 5.0;
  std::string samples_path;  ///< empty when no dump was written
};
[[nodiscard]] std::string format_simulation(const sim_report& r);

/// Sample dump: the config as '#' comment lines, then one value per line.
[[nodiscard]] std::string format_sample_dump(const sim_report& r, const std::vector<double>& chain);

struct stein_check_report {
  std::string target;
  std::optional<stein::poly_coeff> coeff;
  double coeff_max_rel_err = 0.0;  ///< quadrature a vs closed form
  double tolerance = 1e-6;         ///< bound applied to the residual columns
  struct moment_row {
    int order = 0;
    double recursion = 0.0;
    double quadrature = 0.0;
    double identity_residual = 0.0;
  };
  std::vector<moment_row> moments;
  struct solution_row {
    std::string f;
    double max_residual = 0.0;
  };
  std::vector<solution_row> solutions;
  bool passed = false;
};
[[nodiscard]] std::string format_stein_check(const stein_check_report& r);

struct check_row {
  std::string name;
  bool passed = false;
  std::string detail;
};
[[nodiscard]] std::string format_oracle_check(const std::vector<check_row>& rows);

void write_text(const std::string& path, const std::string& text);

}  // namespace chaoskit::io
