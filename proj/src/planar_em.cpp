#include "lcp/planar_em.hpp"

#include <cmath>

#include "lcp/constants.hpp"
#include "lcp/errors.hpp"

namespace lcp {

namespace {
constexpr Complex kImag{0.0, 1.0};
}

Complex kz(double k_par, double omega, Complex epsilon) {
  if (k_par < 0.0) throw InvalidDomain("kz: k_par must be >= 0");
  if (!(omega > 0.0)) throw InvalidDomain("kz: omega must be > 0");
  const double k0 = omega / constants::c0;
  Complex v = std::sqrt(epsilon * k0 * k0 - k_par * k_par);
  // principal sqrt has Re >= 0; fold onto Im >= 0, then Re >= 0 on the real axis
  if (v.imag() < 0.0) v = -v;
  if (v.imag() == 0.0 && v.real() < 0.0) v = -v;
  return v;
}

ModeCoordinates ModeCoordinates::make(double k_par, double phi, double omega,
                                      const Material& mat) {
  ModeCoordinates m;
  m.k_par = k_par;
  m.phi = std::remainder(phi, 2.0 * constants::pi);
  if (m.phi < 0.0) m.phi += 2.0 * constants::pi;
  if (m.phi >= 2.0 * constants::pi) m.phi = 0.0;
  m.omega = omega;
  m.kz_vac = kz(k_par, omega, Complex{1.0, 0.0});
  m.kz_med = mat.perfect_conductor ? Complex{0.0, 0.0} : kz(k_par, omega, mat.epsilon);
  return m;
}

Complex fresnel_rs(const ModeCoordinates& mode, const Material& mat) {
  if (mat.perfect_conductor) return Complex{-1.0, 0.0};
  const Complex den = mode.kz_vac + mode.kz_med;
  if (den == Complex{0.0, 0.0})
    throw InvalidDomain("fresnel_rs: kz_vac + kz_med == 0");
  return (mode.kz_vac - mode.kz_med) / den;
}

Complex fresnel_rp(const ModeCoordinates& mode, const Material& mat) {
  if (mat.perfect_conductor) return Complex{1.0, 0.0};
  const Complex den = mat.epsilon * mode.kz_vac + mode.kz_med;
  if (den == Complex{0.0, 0.0})
    throw InvalidDomain("fresnel_rp: eps kz_vac + kz_med == 0");
  return (mat.epsilon * mode.kz_vac - mode.kz_med) / den;
}

PolarizationVectors polarization_vectors(const ModeCoordinates& mode, int sign) {
  if (sign != 1 && sign != -1)
    throw InvalidDomain("polarization_vectors: sign must be +1 or -1");
  const double cp = std::cos(mode.phi);
  const double sp = std::sin(mode.phi);
  const double c_over_w = constants::c0 / mode.omega;
  const double s = static_cast<double>(sign);

  PolarizationVectors v;
  v.e_s = Vec3c(Complex(sp, 0.0), Complex(-cp, 0.0), Complex(0.0, 0.0));
  v.e_p = Vec3c(-s * c_over_w * mode.kz_vac * cp,
                -s * c_over_w * mode.kz_vac * sp,
                Complex(c_over_w * mode.k_par, 0.0));
  return v;
}

Mat3c green_mode(double z_A, const ModeCoordinates& mode, const Material& mat) {
  if (!(z_A > 0.0)) throw InvalidDomain("green_mode: z_A must be > 0");
  const double k0 = mode.omega / constants::c0;
  if (std::abs(mode.k_par - k0) < kBranchPointWindow * k0)
    throw BranchPointProximity("green_mode: k_par inside the branch-point window");

  const PolarizationVectors up = polarization_vectors(mode, +1);
  const PolarizationVectors down = polarization_vectors(mode, -1);
  const Complex rs = fresnel_rs(mode, mat);
  const Complex rp = fresnel_rp(mode, mat);

  const Complex pref = kImag / (8.0 * constants::pi * constants::pi * mode.kz_vac) *
                       std::exp(2.0 * kImag * mode.kz_vac * z_A);
  // outer products are bilinear: no conjugation on the down-going vectors
  Mat3c g = rs * (up.e_s * down.e_s.transpose()) + rp * (up.e_p * down.e_p.transpose());
  return pref * g;
}

Mat3c green_mode_dx(double z_A, const ModeCoordinates& mode, const Material& mat) {
  const Complex factor = kImag * mode.k_par * std::cos(mode.phi);
  return factor * green_mode(z_A, mode, mat);
}

}  // namespace lcp
