#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chaoskit::cli {

// Raw flag values; each command decides which ones apply.
struct target_flags {
  std::string name;
  std::string file;
  std::optional<double> nu, a, b, lambda, gamma, delta;
};

struct coeff_flags {
  std::optional<double> alpha, beta, gamma;
};

struct output_flags {
  std::string out;
};

struct diagnose_flags {
  std::string family = "gaussian_clt";
  std::vector<unsigned> m;
  unsigned k = 1;
  std::vector<std::string> kernels;
  std::size_t mc = 100000;
  std::optional<std::uint64_t> seed;
};

struct simulate_flags {
  double dt = 1e-3;
  std::size_t burn_in = 100000;
  std::size_t samples = 100000;
  std::size_t thinning = 10;
  std::optional<double> start;
  std::optional<std::uint64_t> seed;
  std::string samples_out;
};

struct oracle_flags {
  std::size_t kernels = 400;
  std::optional<std::uint64_t> seed;
};

// Each returns the process exit code; reports go to stdout or --out.
int targets_list(const output_flags& out);
int targets_coeffs(const target_flags& t, const output_flags& out);
int classify(const target_flags& t, const coeff_flags& c, const output_flags& out);
int diagnose(const target_flags& t, const coeff_flags& c, const diagnose_flags& d, const output_flags& out);
int simulate(const target_flags& t, const simulate_flags& s, const output_flags& out);
int stein_check(const target_flags& t, const output_flags& out);
int oracle_check(const oracle_flags& o, const output_flags& out);

}  // namespace chaoskit::cli
