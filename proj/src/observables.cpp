#include "lcp/observables.hpp"

#include <cmath>

#include "lcp/constants.hpp"
#include "lcp/planar_em.hpp"

namespace lcp {

namespace {

using constants::c0;
using constants::eps0;
using constants::hbar;
using constants::mu0;
using constants::pi;

constexpr Complex kImag{0.0, 1.0};

// a . G . b with the complex bilinear (unconjugated) pairing
Complex sandwich(const Vec3c& a, const Mat3c& G, const Vec3c& b) {
  Complex s{0.0, 0.0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a(i) * G(i, j) * b(j);
  return s;
}

double handedness_sign(const EmitterConfig& cfg) {
  return cfg.handedness == Handedness::SigmaPlus ? 1.0 : -1.0;
}

double time_decay(const EmitterConfig& cfg, const Material& mat, double t,
                  GammaMode gmode, const QuadratureConfig& qcfg) {
  if (t < 0.0) throw InvalidDomain("lateral force: t must be >= 0");
  if (t == 0.0) return 1.0;
  return std::exp(-total_rate(cfg, mat, gmode, qcfg) * t);
}

// Im int dk k^3 e^{2 i kz z} r_p and its error estimate; the common core of
// the full force.
struct SpectralIm {
  double im;
  double err;
};

SpectralIm force_integral(const EmitterConfig& cfg, const Material& mat,
                          const QuadratureConfig& qcfg) {
  const double w = cfg.omega();
  const double z = cfg.z_A;
  const auto f = [&](double k_par) -> Complex {
    const ModeCoordinates mode = ModeCoordinates::make(k_par, 0.0, w, mat);
    return k_par * k_par * k_par * std::exp(2.0 * kImag * mode.kz_vac * z) *
           fresnel_rp(mode, mat);
  };
  const QuadratureResult r = integrate_spectrum(f, w, z, qcfg);
  return {r.value.imag(), r.abs_error_estimate};
}

Material pc_material() { return Material{"pc", {1.0, 0.0}, true}; }

}  // namespace

const char* to_string(ForceRegime r) {
  switch (r) {
    case ForceRegime::Full: return "full";
    case ForceRegime::PerfectConductor: return "pc";
    case ForceRegime::NearField: return "near";
    case ForceRegime::Retarded: return "retarded";
    case ForceRegime::General: return "general";
  }
  return "?";
}

double free_space_rate(const EmitterConfig& cfg) {
  if (!(cfg.wavelength > 0.0) || !(cfg.dipole_magnitude >= 0.0))
    throw InvalidDomain("free_space_rate: invalid emitter");
  const double w = cfg.omega();
  const double d2 = cfg.dipole_magnitude * cfg.dipole_magnitude;
  return w * w * w * (2.0 * d2) / (3.0 * pi * eps0 * hbar * c0 * c0 * c0);
}

double surface_rate(const EmitterConfig& cfg, const Material& mat,
                    const QuadratureConfig& qcfg) {
  cfg.validate();
  const double w = cfg.omega();
  const double z = cfg.z_A;
  const Vec3c d = cfg.dipole();

  const auto f = [&](double k_par) -> Complex {
    const QuadratureResult az = integrate_azimuth(
        [&](double phi) -> Complex {
          const ModeCoordinates mode = ModeCoordinates::make(k_par, phi, w, mat);
          return sandwich(d, green_mode(z, mode, mat), d.conjugate());
        },
        qcfg);
    return k_par * az.value;
  };
  const QuadratureResult r = integrate_spectrum(f, w, z, qcfg);
  return 2.0 * mu0 * w * w / hbar * r.value.imag();
}

double total_rate(const EmitterConfig& cfg, const Material& mat, GammaMode mode,
                  const QuadratureConfig& qcfg) {
  double gamma = free_space_rate(cfg);
  if (mode == GammaMode::Total) gamma += surface_rate(cfg, mat, qcfg);
  // a passive surface cannot make the total rate non-positive; trap the
  // unphysical case instead of producing growing populations
  if (!(gamma > 0.0))
    throw InvalidDomain("total_rate: Gamma_0 + Gamma^(1) must be > 0");
  return gamma;
}

Populations populations(double t, double gamma) {
  if (t < 0.0) throw InvalidDomain("populations: t must be >= 0");
  if (gamma < 0.0) throw InvalidDomain("populations: gamma must be >= 0");
  Populations p;
  p.t = t;
  p.p1 = std::exp(-gamma * t);
  p.p0 = 1.0 - p.p1;
  return p;
}

ForceSample lateral_force(const EmitterConfig& cfg, const Material& mat, double t,
                          GammaMode gmode, const QuadratureConfig& qcfg) {
  cfg.validate();
  const SpectralIm I = force_integral(cfg, mat, qcfg);
  const double d2 = cfg.dipole_magnitude * cfg.dipole_magnitude;
  const double pref = d2 / (2.0 * pi * eps0);
  const double decay = time_decay(cfg, mat, t, gmode, qcfg);
  ForceSample s;
  s.value = -pref * handedness_sign(cfg) * I.im * decay;
  s.regime = ForceRegime::Full;
  s.t = t;
  s.error_estimate = pref * I.err * decay;
  return s;
}

ForceSample lateral_force_general(const std::vector<Transition>& transitions,
                                  const Material& mat, double z_A,
                                  const QuadratureConfig& qcfg) {
  if (!(z_A > 0.0)) throw InvalidDomain("lateral_force_general: z_A must be > 0");
  ForceSample s;
  s.regime = ForceRegime::General;
  s.t = 0.0;

  for (const Transition& tr : transitions) {
    if (!(tr.omega > 0.0))
      throw InvalidDomain("lateral_force_general: transition frequency must be > 0");
    if (tr.population < 0.0 || tr.population > 1.0)
      throw InvalidDomain("lateral_force_general: population must be in [0, 1]");
    if (tr.population == 0.0) continue;

    const double w = tr.omega;
    const double k0 = w / c0;
    const Vec3c d = tr.dipole;

    // absolute floor scaled to the integrand magnitude: a real dipole makes
    // the azimuth integral cancel to rounding noise, and a purely relative
    // target would then never be met
    QuadratureConfig qeff = qcfg;
    qeff.abs_tol = std::max(qeff.abs_tol, 1e-14 * d.squaredNorm() * k0 * k0 * k0 * k0);

    const auto f = [&](double k_par) -> Complex {
      const QuadratureResult az = integrate_azimuth(
          [&](double phi) -> Complex {
            const ModeCoordinates mode = ModeCoordinates::make(k_par, phi, w, mat);
            return sandwich(d, green_mode_dx(z_A, mode, mat), d.conjugate());
          },
          qcfg);
      return k_par * az.value;
    };
    const QuadratureResult r = integrate_spectrum(f, w, z_A, qeff);
    s.value += tr.population * 2.0 * mu0 * w * w * r.value.real();
    s.error_estimate += tr.population * 2.0 * mu0 * w * w * r.abs_error_estimate;
  }
  return s;
}

ForceSample lateral_force_pc(const EmitterConfig& cfg, double t, GammaMode gmode,
                             const QuadratureConfig& qcfg) {
  cfg.validate();
  const double z = cfg.z_A;
  const double lam = cfg.wavelength;
  const double d2 = cfg.dipole_magnitude * cfg.dipole_magnitude;
  const double x = 4.0 * pi * z / lam;

  const double value = 3.0 * d2 / (4.0 * eps0 * lam) * std::cos(x) / (z * z * z) +
                       d2 / eps0 *
                           (pi / (lam * lam * z * z) -
                            3.0 / (16.0 * pi * z * z * z * z)) *
                           std::sin(x);

  const double decay = time_decay(cfg, pc_material(), t, gmode, qcfg);
  ForceSample s;
  s.value = handedness_sign(cfg) * value * decay;
  s.regime = ForceRegime::PerfectConductor;
  s.t = t;
  s.error_estimate = 0.0;
  return s;
}

ForceSample lateral_force_near(const EmitterConfig& cfg, const Material& mat, double t,
                               GammaMode gmode, const QuadratureConfig& qcfg) {
  cfg.validate();
  if (mat.perfect_conductor)
    throw InvalidDomain("lateral_force_near: non-retarded form requires a finite lossy "
                        "permittivity, not a perfect conductor");
  const double z = cfg.z_A;
  const double d2 = cfg.dipole_magnitude * cfg.dipole_magnitude;
  const Complex ep1 = mat.epsilon + 1.0;
  const double value =
      -(3.0 * d2 / (8.0 * pi * eps0 * z * z * z * z)) * mat.epsilon.imag() / std::norm(ep1);

  const double decay = time_decay(cfg, mat, t, gmode, qcfg);
  ForceSample s;
  s.value = handedness_sign(cfg) * value * decay;
  s.regime = ForceRegime::NearField;
  s.t = t;
  s.error_estimate = 0.0;
  return s;
}

ForceSample lateral_force_retarded(const EmitterConfig& cfg, const Material& mat, double t,
                                   GammaMode gmode, const QuadratureConfig& qcfg) {
  cfg.validate();
  if (mat.perfect_conductor)
    throw InvalidDomain("lateral_force_retarded: use the perfect-conductor closed form");
  const double z = cfg.z_A;
  const double lam = cfg.wavelength;
  const double d2 = cfg.dipole_magnitude * cfg.dipole_magnitude;
  const Complex r0 = (std::sqrt(mat.epsilon) - 1.0) / (std::sqrt(mat.epsilon) + 1.0);
  const double x = 4.0 * pi * z / lam;
  const double value = d2 * pi / (eps0 * lam * lam * z * z) *
                       (r0.real() * std::sin(x) + r0.imag() * std::cos(x));

  const double decay = time_decay(cfg, mat, t, gmode, qcfg);
  ForceSample s;
  s.value = handedness_sign(cfg) * value * decay;
  s.regime = ForceRegime::Retarded;
  s.t = t;
  s.error_estimate = 0.0;
  return s;
}

double force_curl_pc(const EmitterConfig& cfg) {
  cfg.validate();
  const double z = cfg.z_A;
  const double lam = cfg.wavelength;
  const double d2 = cfg.dipole_magnitude * cfg.dipole_magnitude;
  const double x = 4.0 * pi * z / lam;
  const double z2 = z * z, z3 = z2 * z, z4 = z3 * z, z5 = z4 * z;
  const double value =
      d2 / eps0 *
      ((4.0 * pi * pi / (lam * lam * lam * z2) - 3.0 / (lam * z4)) * std::cos(x) +
       (3.0 / (4.0 * pi * z5) - 5.0 * pi / (lam * lam * z3)) * std::sin(x));
  return handedness_sign(cfg) * value;
}

double recoil_velocity(const EmitterConfig& cfg, const Material& mat, GammaMode gmode,
                       const QuadratureConfig& qcfg) {
  cfg.validate();
  const ForceSample f0 = lateral_force(cfg, mat, 0.0, gmode, qcfg);
  const double gamma = total_rate(cfg, mat, gmode, qcfg);
  return f0.value / (cfg.mass * gamma);
}

Mat3c phi_integrated_green(double z_A, double k_par, double omega, const Material& mat,
                           const QuadratureConfig& qcfg) {
  Mat3c T;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      T(i, j) = integrate_azimuth(
                    [&](double phi) -> Complex {
                      const ModeCoordinates mode =
                          ModeCoordinates::make(k_par, phi, omega, mat);
                      return green_mode(z_A, mode, mat)(i, j);
                    },
                    qcfg)
                    .value;
  return T;
}

Mat3c phi_integrated_green_dx(double z_A, double k_par, double omega, const Material& mat,
                              const QuadratureConfig& qcfg) {
  Mat3c T;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      T(i, j) = integrate_azimuth(
                    [&](double phi) -> Complex {
                      const ModeCoordinates mode =
                          ModeCoordinates::make(k_par, phi, omega, mat);
                      return green_mode_dx(z_A, mode, mat)(i, j);
                    },
                    qcfg)
                    .value;
  return T;
}

}  // namespace lcp
