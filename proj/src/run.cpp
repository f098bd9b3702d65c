#include "lcp/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "lcp/spectrum.hpp"

#include <nlohmann/json.hpp>

namespace lcp {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string hex64(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct RowValue {
  double value = kNaN;
  double error = 0.0;
  const char* regime = "full";
  bool converged = true;
  double mm_s = kNaN;                      // velocity only
  SpectrumCoefficients coeffs{};           // coefficients only
};

RowValue eval_row(const SweepSpec& spec, const Material& mat, double z) {
  EmitterConfig cfg = spec.emitter;
  cfg.z_A = z;
  RowValue r;
  try {
    switch (spec.quantity) {
      case Quantity::Force: {
        const ForceSample f = lateral_force(cfg, mat, spec.t, spec.gamma_mode, spec.quad);
        r.value = f.value;
        r.error = f.error_estimate;
        r.regime = to_string(f.regime);
        break;
      }
      case Quantity::ForcePc: {
        const ForceSample f = lateral_force_pc(cfg, spec.t, spec.gamma_mode, spec.quad);
        r.value = f.value;
        r.error = f.error_estimate;
        r.regime = to_string(f.regime);
        break;
      }
      case Quantity::ForceNear: {
        const ForceSample f =
            lateral_force_near(cfg, mat, spec.t, spec.gamma_mode, spec.quad);
        r.value = f.value;
        r.error = f.error_estimate;
        r.regime = to_string(f.regime);
        break;
      }
      case Quantity::ForceRetarded: {
        const ForceSample f =
            lateral_force_retarded(cfg, mat, spec.t, spec.gamma_mode, spec.quad);
        r.value = f.value;
        r.error = f.error_estimate;
        r.regime = to_string(f.regime);
        break;
      }
      case Quantity::Rate:
        r.value = total_rate(cfg, mat, spec.gamma_mode, spec.quad);
        break;
      case Quantity::Velocity:
        r.value = recoil_velocity(cfg, mat, spec.gamma_mode, spec.quad);
        r.mm_s = r.value * 1e3;
        break;
      case Quantity::Coefficients:
        r.coeffs = spectrum_coefficients(cfg, mat, spec.quad);
        r.error = r.coeffs.abs_error_estimate;
        break;
      case Quantity::Asymmetry:
        r.value = asymmetry(cfg, mat, spec.quad);
        break;
      case Quantity::Curl:
        r.value = force_curl_pc(cfg);
        r.regime = "pc";
        break;
    }
  } catch (const NonConvergence&) {
    r.value = kNaN;
    r.mm_s = kNaN;
    r.converged = false;
  }
  return r;
}

void append_common_metadata(DataTable& t, const SweepSpec* spec,
                            const MaterialRegistry& registry) {
  if (spec) {
    t.metadata.emplace_back("quantity", to_string(spec->quantity));
    t.metadata.emplace_back("material", spec->material);
    t.metadata.emplace_back("z_min_nm", fmt17(spec->z_min * 1e9));
    t.metadata.emplace_back("z_max_nm", fmt17(spec->z_max * 1e9));
    t.metadata.emplace_back("points", std::to_string(spec->n_points));
    t.metadata.emplace_back("scale", spec->scale == Scale::Linear ? "linear" : "log");
    t.metadata.emplace_back("t_s", fmt17(spec->t));
    t.metadata.emplace_back("gamma_mode",
                            spec->gamma_mode == GammaMode::Total ? "total" : "free-space");
    t.metadata.emplace_back("rel_tol", fmt17(spec->quad.rel_tol));
    t.metadata.emplace_back("abs_tol", fmt17(spec->quad.abs_tol));
    t.metadata.emplace_back("tail_exponent_cutoff", fmt17(spec->quad.tail_exponent_cutoff));
  }
  t.metadata.emplace_back("registry_hash", hex64(registry.fingerprint()));
  t.metadata.emplace_back("version", kVersion);
}

}  // namespace

Quantity parse_quantity(const std::string& name) {
  if (name == "force") return Quantity::Force;
  if (name == "force-pc") return Quantity::ForcePc;
  if (name == "force-near") return Quantity::ForceNear;
  if (name == "force-retarded") return Quantity::ForceRetarded;
  if (name == "rate") return Quantity::Rate;
  if (name == "velocity") return Quantity::Velocity;
  if (name == "coefficients") return Quantity::Coefficients;
  if (name == "asymmetry") return Quantity::Asymmetry;
  if (name == "curl") return Quantity::Curl;
  if (name == "spectrum")
    throw InvalidDomain("quantity 'spectrum' is not sweepable; use the spectrum command");
  throw InvalidDomain("unknown quantity '" + name + "'");
}

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::Force: return "force";
    case Quantity::ForcePc: return "force-pc";
    case Quantity::ForceNear: return "force-near";
    case Quantity::ForceRetarded: return "force-retarded";
    case Quantity::Rate: return "rate";
    case Quantity::Velocity: return "velocity";
    case Quantity::Coefficients: return "coefficients";
    case Quantity::Asymmetry: return "asymmetry";
    case Quantity::Curl: return "curl";
  }
  return "?";
}

void SweepSpec::validate() const {
  if (!(z_min > 0.0)) throw InvalidDomain("sweep: z_min must be > 0");
  if (!(z_max > z_min)) throw InvalidDomain("sweep: z_max must be > z_min");
  if (n_points < 2) throw InvalidDomain("sweep: n_points must be >= 2");
  if (workers < 1) throw InvalidDomain("sweep: workers must be >= 1");
  quad.validate();
}

DataTable run_sweep(const SweepSpec& spec, const MaterialRegistry& registry) {
  const Material& mat = registry.get(spec.material);
  spec.validate();

  if ((spec.quantity == Quantity::ForcePc || spec.quantity == Quantity::Curl) &&
      !mat.perfect_conductor)
    throw InvalidDomain(std::string(to_string(spec.quantity)) +
                        " requires the perfect-conductor material");

  std::vector<double> grid(spec.n_points);
  for (int i = 0; i < spec.n_points; ++i) {
    const double f = static_cast<double>(i) / (spec.n_points - 1);
    grid[i] = spec.scale == Scale::Linear
                  ? spec.z_min + (spec.z_max - spec.z_min) * f
                  : std::exp(std::log(spec.z_min) + (std::log(spec.z_max) - std::log(spec.z_min)) * f);
  }

  std::vector<RowValue> rows(grid.size());
  const int workers = std::min<int>(spec.workers, static_cast<int>(grid.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) rows[i] = eval_row(spec, mat, grid[i]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < grid.size(); i += workers)
          rows[i] = eval_row(spec, mat, grid[i]);
      });
    for (auto& th : pool) th.join();
  }

  DataTable table;
  append_common_metadata(table, &spec, registry);

  if (spec.quantity == Quantity::Coefficients) {
    table.columns = {"z_A_nm", "A", "B", "C", "D", "error_estimate", "flag"};
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const RowValue& r = rows[i];
      table.any_nonconvergence |= !r.converged;
      table.rows.push_back({grid[i] * 1e9,
                            r.converged ? r.coeffs.A : kNaN,
                            r.converged ? r.coeffs.B : kNaN,
                            r.converged ? r.coeffs.C : kNaN,
                            r.converged ? r.coeffs.D : kNaN,
                            r.error,
                            std::string(r.converged ? "" : "nonconvergence")});
    }
    return table;
  }

  table.columns = {"z_A_nm", "value_SI", "error_estimate", "regime", "flag"};
  const bool velocity = spec.quantity == Quantity::Velocity;
  if (velocity) table.columns.push_back("value_mm_s");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const RowValue& r = rows[i];
    table.any_nonconvergence |= !r.converged;
    std::vector<Cell> row{grid[i] * 1e9, r.value, r.error, std::string(r.regime),
                          std::string(r.converged ? "" : "nonconvergence")};
    if (velocity) row.push_back(r.mm_s);
    table.rows.push_back(std::move(row));
  }
  return table;
}

DataTable run_spectrum(const std::string& material, double z_A, int n_phi,
                       const EmitterConfig& emitter, const MaterialRegistry& registry,
                       const QuadratureConfig& qcfg) {
  const Material& mat = registry.get(material);
  if (n_phi < 2) throw InvalidDomain("spectrum: n_phi must be >= 2");
  EmitterConfig cfg = emitter;
  cfg.z_A = z_A;
  cfg.validate();

  const SpectrumCoefficients sc = spectrum_coefficients(cfg, mat, qcfg);

  DataTable table;
  table.metadata.emplace_back("material", material);
  table.metadata.emplace_back("z_A_nm", fmt17(z_A * 1e9));
  table.metadata.emplace_back("A", fmt17(sc.A));
  table.metadata.emplace_back("B", fmt17(sc.B));
  table.metadata.emplace_back("C", fmt17(sc.C));
  table.metadata.emplace_back("D", fmt17(sc.D));
  table.metadata.emplace_back("four_B", fmt17(4.0 * sc.B));
  table.metadata.emplace_back("abs_error_estimate", fmt17(sc.abs_error_estimate));
  append_common_metadata(table, nullptr, registry);

  table.columns = {"phi_rad", "gamma_bar_raw", "gamma_bar_normalized"};
  std::vector<double> raw(n_phi);
  double peak = 0.0;
  for (int j = 0; j < n_phi; ++j) {
    const double phi = 2.0 * constants::pi * j / n_phi;
    const double c = std::cos(phi), s = std::sin(phi);
    raw[j] = sc.A + sc.B * c + sc.C * c * c + sc.D * s * s;
    peak = std::max(peak, std::abs(raw[j]));
  }
  for (int j = 0; j < n_phi; ++j) {
    const double phi = 2.0 * constants::pi * j / n_phi;
    table.rows.push_back({phi, raw[j], peak > 0.0 ? raw[j] / peak : 0.0});
  }
  return table;
}

DataTable compare_asymptotics(const std::string& material, const std::vector<double>& z_list,
                              const EmitterConfig& emitter, const MaterialRegistry& registry,
                              const QuadratureConfig& qcfg) {
  const Material& mat = registry.get(material);
  if (mat.perfect_conductor)
    throw InvalidDomain("asymptotics: the near branch requires a finite lossy permittivity");
  if (z_list.empty()) throw InvalidDomain("asymptotics: empty z list");

  DataTable table;
  table.metadata.emplace_back("material", material);
  append_common_metadata(table, nullptr, registry);
  table.columns = {"z_A_nm", "F_full", "F_near", "F_retarded", "rel_dev_near", "rel_dev_ret"};

  for (double z : z_list) {
    if (!(z > 0.0)) throw InvalidDomain("asymptotics: z values must be > 0");
    EmitterConfig cfg = emitter;
    cfg.z_A = z;
    const double full = lateral_force(cfg, mat, 0.0, GammaMode::Total, qcfg).value;
    const double near = lateral_force_near(cfg, mat, 0.0, GammaMode::Total, qcfg).value;
    const double ret = lateral_force_retarded(cfg, mat, 0.0, GammaMode::Total, qcfg).value;
    const double dev_near = near != 0.0 ? std::abs(full - near) / std::abs(near) : kNaN;
    const double dev_ret = ret != 0.0 ? std::abs(full - ret) / std::abs(ret) : kNaN;
    table.rows.push_back({z * 1e9, full, near, ret, dev_near, dev_ret});
  }
  return table;
}

void write_csv(const DataTable& table, std::ostream& out) {
  for (const auto& [k, v] : table.metadata) out << "# " << k << " = " << v << "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    out << table.columns[c] << (c + 1 < table.columns.size() ? "," : "\n");
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (std::holds_alternative<double>(row[c]))
        out << fmt17(std::get<double>(row[c]));
      else
        out << std::get<std::string>(row[c]);
      out << (c + 1 < row.size() ? "," : "\n");
    }
  }
}

void write_json(const DataTable& table, std::ostream& out) {
  nlohmann::json j;
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [k, v] : table.metadata) {
    // tolerances and similar numeric metadata stay numeric in the mirror
    char* end = nullptr;
    const double num = std::strtod(v.c_str(), &end);
    if (end && *end == '\0' && !v.empty() && k != "registry_hash" && k != "version")
      meta[k] = num;
    else
      meta[k] = v;
  }
  j["metadata"] = meta;
  j["columns"] = table.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& cell : row) {
      if (std::holds_alternative<double>(cell))
        r.push_back(std::get<double>(cell));
      else
        r.push_back(std::get<std::string>(cell));
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  out << j.dump(2) << "\n";
}

}  // namespace lcp
