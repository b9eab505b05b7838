#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>

#include <json.hpp>

#include "chaoskit/diagnostics/classifier.hpp"
#include "chaoskit/diagnostics/family_report.hpp"
#include "chaoskit/diagnostics/kernel_family.hpp"
#include "chaoskit/error.hpp"
#include "chaoskit/io/kernel_io.hpp"
#include "chaoskit/io/report_io.hpp"
#include "chaoskit/io/target_io.hpp"
#include "chaoskit/stein/named_targets.hpp"
#include "chaoskit/stein/stein_solution.hpp"
#include "random_kernels.hpp"

using namespace chaoskit;
using nlohmann::json;

namespace {

std::string error_of(std::string_view text) {
  try {
    (void)io::parse_kernel(text);
  } catch (const validation_error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("kernel round trip") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    auto k = testing_support::random_kernel(rng, 2 + t % 4, 1 + t % 4, 5);
    k.add(std::vector<gaussian::index_t>(k.order(), 0), 1.0 / 3.0);
    const auto text = io::format_kernel(k);
    const auto back = io::parse_kernel(text);
    CHECK(back == k);
    CHECK(io::format_kernel(back) == text);
  }
  const auto path = (std::filesystem::temp_directory_path() / "chaoskit_kernel_rt.json").string();
  const auto k = diagnostics::kernel_family::gaussian_clt().member(3);
  io::save_kernel(k, path);
  CHECK(io::load_kernel(path) == k);
  std::filesystem::remove(path);
  CHECK_THROWS_AS((void)io::load_kernel("/nonexistent/kernel.json"), validation_error);
}

TEST_CASE("canonical kernel files are reproduced byte for byte") {
  for (const char* name : {"e1e1.json", "clt2.json"}) {
    const std::string path = std::string(CHAOSKIT_TEST_DATA) + "/" + name;
    std::ifstream in(path, std::ios::binary);
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    REQUIRE(!bytes.empty());
    CHECK(io::format_kernel(io::load_kernel(path)) == bytes);
  }
  const auto e = io::load_kernel(std::string(CHAOSKIT_TEST_DATA) + "/e1e1.json");
  CHECK(e.order() == 2);
  CHECK(e.norm_squared() == 1.0);
}

TEST_CASE("kernel validation messages") {
  CHECK(error_of(R"({"dim": 2, "order": 2, "entries": [{"idx": [1, 0], "val": 1}]})").find("idx") != std::string::npos);
  CHECK(error_of(R"({"dim": 2, "order": 2, "entries": [{"idx": [0, 2], "val": 1}]})").find("idx") != std::string::npos);
  CHECK(error_of(R"({"dim": 2, "order": 2, "entries": [{"idx": [0, 1], "val": 1}, {"idx": [0, 1], "val": 2}]})")
            .find("duplicate") != std::string::npos);
  CHECK(error_of(R"({"dim": 2, "order": 2, "entries": [{"idx": [0], "val": 1}]})") != "");
  CHECK(error_of(R"({"dim": 2, "order": 2, "entries": [{"idx": [0, 0], "val": "x"}]})").find("val") !=
        std::string::npos);
  CHECK(error_of(R"({"dim": -1, "order": 2, "entries": []})").find("dim") != std::string::npos);
  CHECK(error_of(R"({"order": 2, "entries": []})").find("dim") != std::string::npos);
  CHECK(error_of("{not json") != "");
  CHECK(error_of(R"({"dim": 1, "order": 1, "entries": [{"idx": [0], "val": 2.5}]})") == "");
}

TEST_CASE("named target parsing") {
  const auto t = io::parse_target(R"({"name": "gamma", "params": {"a": 2.0, "lambda": 0.5}})");
  REQUIRE(t.named);
  CHECK(t.named->name() == "gamma");
  CHECK(t.measure.coeff().coefficients() == stein::closed_form_coeff(*t.named));
  CHECK_THROWS_AS((void)io::parse_target(R"({"name": "gamma", "params": {"a": -1, "lambda": 1}})"), validation_error);
  CHECK_THROWS_AS((void)io::parse_target(R"({"name": "nope"})"), validation_error);
}

TEST_CASE("grid density targets") {
  // Normal density on a grid: the fitted coefficient is close to 1.
  std::vector<std::pair<double, double>> grid;
  for (int i = -40; i <= 40; ++i) {
    const double x = 0.15 * i;
    grid.emplace_back(x, std::exp(-0.5 * x * x));
  }
  const auto t = io::make_grid_target(grid, {-stein::infinity, stein::infinity});
  CHECK(std::abs(t.shift) < 1e-6);
  CHECK(t.measure.expect([](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-6));
  for (double x : {-1.5, 0.0, 0.7, 2.0}) CHECK(t.measure.a(x) == doctest::Approx(2.0).epsilon(1e-3));

  // The Stein solution stays consistent with a quadrature-backed coefficient,
  // including across the junction with the linear tails.
  for (const stein::real_fn f : {stein::real_fn([](double x) { return x; }), stein::real_fn([](double x) { return x * x; })}) {
    const stein::stein_solution g(t.measure, f);
    for (double x : stein::interior_grid(t.measure, 31)) CHECK(std::abs(g.residual(x)) < 1e-8);
  }

  // A shifted grid is recentered.
  std::vector<std::pair<double, double>> shifted;
  for (const auto& [x, p] : grid) shifted.emplace_back(x + 3.0, p);
  const auto s = io::make_grid_target(shifted, {-stein::infinity, stein::infinity});
  CHECK(s.shift == doctest::Approx(3.0).epsilon(1e-6));

  const std::string text = R"({"name": "custom", "support": [0, null],
      "density": [[0.1, 0.905], [0.5, 0.607], [1.0, 0.368], [2.0, 0.135], [4.0, 0.018]]})";
  const auto c = io::parse_target(text);
  CHECK_FALSE(c.named);
  CHECK(c.measure.support().upper == stein::infinity);
  CHECK(c.measure.support().lower == doctest::Approx(-c.shift));

  CHECK_THROWS_AS((void)io::parse_target(R"({"name": "custom", "support": [0, 1],
      "density": [[0.1, 1], [0.2, 1]]})"), validation_error);
  CHECK_THROWS_AS((void)io::parse_target(R"({"name": "custom", "support": [0, 1],
      "density": [[0.1, 1], [0.3, 1], [0.2, 1], [0.4, 1]]})"), validation_error);
  CHECK_THROWS_AS((void)io::parse_target(R"({"name": "custom", "support": [0, null],
      "density": [[0.1, 1], [0.2, 2], [0.3, 3], [0.4, 4]]})"), validation_error);
}

TEST_CASE("reports are valid JSON with the schema fields") {
  const auto list = json::parse(io::format_targets_list());
  CHECK(list["schema_version"] == "1");
  CHECK(list.contains("command"));

  const auto nt = stein::named_target::make("student", {{"nu", 5.0}});
  const auto coeffs = json::parse(io::format_coeffs({"student", nt.params, stein::closed_form_coeff(nt), 0.0, 5.0}));
  CHECK(coeffs["alpha"].get<double>() == doctest::Approx(0.5));
  CHECK(coeffs["gamma"].get<double>() == doctest::Approx(2.5));

  const auto cls = json::parse(io::format_classifier(diagnostics::classify({0, 2, 2})));
  CHECK(cls["verdict"]["kind"] == "GammaOnly");
  CHECK(cls["verdict"]["lambda"].get<double>() == doctest::Approx(1.0));
  CHECK(cls["c_n"]["c_2"].get<double>() == doctest::Approx(0.25));
  const auto excl = json::parse(io::format_classifier(diagnostics::classify({1, 1, 1})));
  CHECK(excl["C0"].is_null());
  CHECK(excl["verdict"]["kind"] == "OutsideHypotheses");

  const auto rep = diagnostics::run_family_diagnostics(diagnostics::kernel_family::gaussian_clt(), {1, 2}, "normal",
                                                       {0, 0, 2}, {100, 3});
  const auto d = json::parse(io::format_diagnostics(rep));
  REQUIRE(d["members"].size() == 2);
  CHECK(d["members"][1]["EF4"].get<double>() == doctest::Approx(9.0));
  CHECK(d["members"][0]["stein_residual_L2"].get<double>() == doctest::Approx(2.0));

  // 17 significant digits survive a round trip.
  const double third = 1.0 / 3.0;
  {
    gaussian::symmetric_kernel k(1, 1);
    k.add({0}, third);
    CHECK(io::parse_kernel(io::format_kernel(k)).entries().begin()->second == third);
  }

  std::vector<io::check_row> rows{{"a", true, ""}, {"b", false, "bad"}};
  const auto oc = json::parse(io::format_oracle_check(rows));
  CHECK(oc["passed"] == 1);
  CHECK(oc["failed"] == 1);
}
