#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "lcp/material.hpp"
#include "lcp/observables.hpp"

namespace lcp {

enum class Quantity {
  Force,          // full integral, N
  ForcePc,        // perfect-conductor closed form, N
  ForceNear,      // non-retarded closed form, N
  ForceRetarded,  // retarded closed form, N
  Rate,           // total decay rate Gamma_0 + Gamma^(1), 1/s
  Velocity,       // recoil velocity, m/s (plus an mm/s convenience column)
  Coefficients,   // spectrum coefficients A, B, C, D
  Asymmetry,      // 4 B(z_A), N
  Curl,           // dF_x/dz_A for the perfect conductor, N/m
};

Quantity parse_quantity(const std::string& name);  // throws InvalidDomain
const char* to_string(Quantity q);

enum class Scale { Linear, Log };

struct SweepSpec {
  Quantity quantity = Quantity::Force;
  std::string material;
  double z_min = 0.0;  // m
  double z_max = 0.0;  // m
  int n_points = 500;
  Scale scale = Scale::Linear;
  double t = 0.0;  // s
  GammaMode gamma_mode = GammaMode::Total;
  QuadratureConfig quad;
  EmitterConfig emitter;  // z_A is overridden per row
  int workers = 1;

  void validate() const;  // z_min > 0, z_max > z_min, n_points >= 2
};

using Cell = std::variant<double, std::string>;

// Column-ordered table plus run metadata. CSV numbers are written with 17
// significant digits; the JSON mirror carries the same values plus metadata.
struct DataTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;
  bool any_nonconvergence = false;
};

// One row per z_A. Scalar quantities use the fixed schema
//   z_A_nm,value_SI,error_estimate,regime,flag
// (velocity appends value_mm_s; coefficients use z_A_nm,A,B,C,D,error_estimate,flag).
// Rows that fail to converge carry NaN and flag = "nonconvergence".
DataTable run_sweep(const SweepSpec& spec, const MaterialRegistry& registry);

// Polar dataset phi_rad,gamma_bar_raw,gamma_bar_normalized on a uniform phi
// grid; metadata records A, B, C, D and 4B.
DataTable run_spectrum(const std::string& material, double z_A, int n_phi,
                       const EmitterConfig& emitter, const MaterialRegistry& registry,
                       const QuadratureConfig& qcfg = {});

// z_A_nm,F_full,F_near,F_retarded,rel_dev_near,rel_dev_ret
DataTable compare_asymptotics(const std::string& material, const std::vector<double>& z_list,
                              const EmitterConfig& emitter, const MaterialRegistry& registry,
                              const QuadratureConfig& qcfg = {});

void write_csv(const DataTable& table, std::ostream& out);
void write_json(const DataTable& table, std::ostream& out);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lcp
