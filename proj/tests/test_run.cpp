#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lcp/run.hpp"

using namespace lcp;

namespace {

const auto kRegistry = MaterialRegistry::builtin();

SweepSpec basic_spec(Quantity q, const std::string& mat, double zmin_nm, double zmax_nm,
                     int points) {
  SweepSpec s;
  s.quantity = q;
  s.material = mat;
  s.z_min = zmin_nm * 1e-9;
  s.z_max = zmax_nm * 1e-9;
  s.n_points = points;
  return s;
}

double cell_num(const Cell& c) { return std::get<double>(c); }
const std::string& cell_str(const Cell& c) { return std::get<std::string>(c); }

// relative comparison; doctest's Approx is unusable at these magnitudes
bool rel_eq(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

}  // namespace

TEST_CASE("quantity names round-trip; spectrum is not sweepable") {
  for (const char* name : {"force", "force-pc", "force-near", "force-retarded", "rate",
                           "velocity", "coefficients", "asymmetry", "curl"}) {
    CHECK(std::string(to_string(parse_quantity(name))) == name);
  }
  CHECK_THROWS_AS(parse_quantity("spectrum"), InvalidDomain);
  CHECK_THROWS_AS(parse_quantity("bogus"), InvalidDomain);
}

TEST_CASE("scalar sweep: fixed schema, grid endpoints, regimes") {
  const auto t = run_sweep(basic_spec(Quantity::ForcePc, "pc", 213.0, 426.0, 3), kRegistry);
  CHECK(t.columns == std::vector<std::string>{"z_A_nm", "value_SI", "error_estimate",
                                              "regime", "flag"});
  REQUIRE(t.rows.size() == 3);
  CHECK(rel_eq(cell_num(t.rows.front()[0]), 213.0, 1e-12));
  CHECK(rel_eq(cell_num(t.rows.back()[0]), 426.0, 1e-12));
  CHECK(cell_str(t.rows[0][3]) == "pc");
  CHECK(cell_str(t.rows[0][4]).empty());
  CHECK_FALSE(t.any_nonconvergence);
  // closed form at the lambda/4 antinode
  CHECK(rel_eq(cell_num(t.rows[0][1]), -3.713995e-21, 1e-5));
}

TEST_CASE("velocity sweep appends the mm/s convenience column") {
  const auto t = run_sweep(basic_spec(Quantity::Velocity, "gold", 190.0, 264.0, 2), kRegistry);
  CHECK(t.columns == std::vector<std::string>{"z_A_nm", "value_SI", "error_estimate",
                                              "regime", "flag", "value_mm_s"});
  CHECK(rel_eq(cell_num(t.rows[0][5]), 1e3 * cell_num(t.rows[0][1]), 1e-15));
}

TEST_CASE("coefficients sweep has its own schema") {
  const auto t =
      run_sweep(basic_spec(Quantity::Coefficients, "gold", 264.0, 302.0, 2), kRegistry);
  CHECK(t.columns ==
        std::vector<std::string>{"z_A_nm", "A", "B", "C", "D", "error_estimate", "flag"});
  CHECK(t.rows.size() == 2);
  CHECK(cell_num(t.rows[0][2]) > 0.0);  // B > 0 at 264 nm above the landmark material
}

TEST_CASE("log scale grid") {
  auto spec = basic_spec(Quantity::ForcePc, "pc", 100.0, 1000.0, 3);
  spec.scale = Scale::Log;
  const auto t = run_sweep(spec, kRegistry);
  CHECK(rel_eq(cell_num(t.rows[1][0]), std::sqrt(100.0 * 1000.0), 1e-12));
}

TEST_CASE("sweep validation and material/quantity compatibility") {
  CHECK_THROWS_AS(run_sweep(basic_spec(Quantity::Force, "nope", 100, 200, 2), kRegistry),
                  UnknownMaterial);
  CHECK_THROWS_AS(run_sweep(basic_spec(Quantity::Force, "gold", -5, 200, 2), kRegistry),
                  InvalidDomain);
  CHECK_THROWS_AS(run_sweep(basic_spec(Quantity::Force, "gold", 300, 200, 2), kRegistry),
                  InvalidDomain);
  CHECK_THROWS_AS(run_sweep(basic_spec(Quantity::Force, "gold", 100, 200, 1), kRegistry),
                  InvalidDomain);
  CHECK_THROWS_AS(run_sweep(basic_spec(Quantity::ForcePc, "gold", 100, 200, 2), kRegistry),
                  InvalidDomain);
  CHECK_THROWS_AS(run_sweep(basic_spec(Quantity::Curl, "silica", 100, 200, 2), kRegistry),
                  InvalidDomain);
  CHECK_THROWS_AS(run_sweep(basic_spec(Quantity::ForceNear, "pc", 100, 200, 2), kRegistry),
                  InvalidDomain);
}

TEST_CASE("nonconvergent rows carry NaN and a flag") {
  auto spec = basic_spec(Quantity::Force, "gold", 8.0, 9.0, 2);
  // the Lambda = 20 truncation cannot deliver 1e-9 at these distances, so the
  // engine refuses row by row
  spec.quad.tail_exponent_cutoff = 20.0;
  spec.quad.rel_tol = 1e-9;
  const auto t = run_sweep(spec, kRegistry);
  CHECK(t.any_nonconvergence);
  CHECK(std::isnan(cell_num(t.rows[0][1])));
  CHECK(cell_str(t.rows[0][4]) == "nonconvergence");
}

TEST_CASE("worker count does not change the result") {
  auto spec = basic_spec(Quantity::Force, "gold", 150.0, 900.0, 9);
  const auto serial = run_sweep(spec, kRegistry);
  spec.workers = 4;
  const auto parallel = run_sweep(spec, kRegistry);
  REQUIRE(serial.rows.size() == parallel.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i)
    for (std::size_t c = 0; c < serial.rows[i].size(); ++c) {
      if (std::holds_alternative<double>(serial.rows[i][c]))
        CHECK(cell_num(serial.rows[i][c]) == cell_num(parallel.rows[i][c]));
      else
        CHECK(cell_str(serial.rows[i][c]) == cell_str(parallel.rows[i][c]));
    }
}

TEST_CASE("spectrum dataset: schema, normalization, metadata header") {
  EmitterConfig emitter;
  emitter.z_A = 1e-9;
  const auto t = run_spectrum("gold", 264e-9, 360, emitter, kRegistry);
  CHECK(t.columns ==
        std::vector<std::string>{"phi_rad", "gamma_bar_raw", "gamma_bar_normalized"});
  REQUIRE(t.rows.size() == 360);

  bool has_A = false, has_fourB = false;
  double fourB = 0.0, B = 0.0;
  for (const auto& [k, v] : t.metadata) {
    if (k == "A") has_A = true;
    if (k == "B") B = std::stod(v);
    if (k == "four_B") {
      has_fourB = true;
      fourB = std::stod(v);
    }
  }
  CHECK(has_A);
  CHECK(has_fourB);
  CHECK(rel_eq(fourB, 4.0 * B, 1e-15));

  double peak = 0.0;
  int peak_idx = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double norm = cell_num(t.rows[i][2]);
    if (std::abs(norm) > std::abs(peak)) {
      peak = norm;
      peak_idx = static_cast<int>(i);
    }
    CHECK(std::abs(norm) <= 1.0 + 1e-15);
  }
  CHECK(std::abs(std::abs(peak) - 1.0) < 1e-12);
  // stronger emission in +x at 264 nm
  const double phi_peak = cell_num(t.rows[peak_idx][0]);
  CHECK((phi_peak < lcp::constants::pi / 2.0 || phi_peak > 1.5 * lcp::constants::pi));

  const auto tv = run_spectrum("vacuum", 264e-9, 8, emitter, kRegistry);
  for (const auto& row : tv.rows) {
    CHECK(cell_num(row[1]) == 0.0);
    CHECK(cell_num(row[2]) == 0.0);
  }

  CHECK_THROWS_AS(run_spectrum("nope", 264e-9, 8, emitter, kRegistry), UnknownMaterial);
  CHECK_THROWS_AS(run_spectrum("gold", 264e-9, 1, emitter, kRegistry), InvalidDomain);
}

TEST_CASE("asymptotics dataset matches the stated convergence examples") {
  EmitterConfig emitter;
  emitter.z_A = 1e-9;
  const double lam = emitter.wavelength;
  const auto t = compare_asymptotics("gold", {lam / 200.0, 10.0 * lam}, emitter, kRegistry);
  CHECK(t.columns == std::vector<std::string>{"z_A_nm", "F_full", "F_near", "F_retarded",
                                              "rel_dev_near", "rel_dev_ret"});
  REQUIRE(t.rows.size() == 2);
  CHECK(cell_num(t.rows[0][4]) <= 0.02);  // near field at lambda/200
  CHECK(cell_num(t.rows[1][5]) <= 0.05);  // retarded at 10 lambda

  CHECK_THROWS_AS(compare_asymptotics("pc", {lam}, emitter, kRegistry), InvalidDomain);
  CHECK_THROWS_AS(compare_asymptotics("gold", {}, emitter, kRegistry), InvalidDomain);
}

TEST_CASE("csv writer: golden header, comment metadata, 17-digit round trip") {
  const auto t = run_sweep(basic_spec(Quantity::ForcePc, "pc", 213.0, 426.0, 2), kRegistry);
  std::ostringstream out;
  write_csv(t, out);
  const std::string text = out.str();

  CHECK(text.find("z_A_nm,value_SI,error_estimate,regime,flag\n") != std::string::npos);
  CHECK(text.find("# quantity = force-pc") != std::string::npos);
  CHECK(text.find("# registry_hash = ") != std::string::npos);
  CHECK(text.find("# version = ") != std::string::npos);

  // round-trip: parse the first row's cells back
  const auto hdr = text.find("z_A_nm,");
  const auto line_start = text.find('\n', hdr) + 1;
  const auto line_end = text.find('\n', line_start);
  const std::string line = text.substr(line_start, line_end - line_start);
  const std::string first = line.substr(0, line.find(','));
  CHECK(std::stod(first) == std::get<double>(t.rows[0][0]));
  const auto second = line.substr(line.find(',') + 1);
  const std::string value = second.substr(0, second.find(','));
  CHECK(std::stod(value) == std::get<double>(t.rows[0][1]));
}

TEST_CASE("json mirror carries the same values plus metadata") {
  const auto t = run_sweep(basic_spec(Quantity::ForcePc, "pc", 213.0, 426.0, 2), kRegistry);
  std::ostringstream out;
  write_json(t, out);
  const auto j = nlohmann::json::parse(out.str());

  CHECK(j["metadata"]["quantity"] == "force-pc");
  CHECK(j["metadata"]["rel_tol"].is_number());
  CHECK(j["metadata"]["registry_hash"].is_string());
  CHECK(j["metadata"].contains("version"));
  CHECK(j["columns"].size() == 5);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0][1].get<double>() == std::get<double>(t.rows[0][1]));
}
