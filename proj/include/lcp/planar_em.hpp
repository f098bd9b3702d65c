#pragma once

#include <Eigen/Dense>
#include <complex>

#include "lcp/material.hpp"

namespace lcp {

using Complex = std::complex<double>;
using Vec3c = Eigen::Vector3cd;
using Mat3c = Eigen::Matrix3cd;

// Perpendicular wavenumber sqrt(eps w^2/c^2 - k_par^2) on the branch with
// Im >= 0 (Re >= 0 when Im == 0), so exp(2 i kz z) decays for evanescent
// modes. Applied identically to vacuum (eps = 1) and medium.
Complex kz(double k_par, double omega, Complex epsilon);

// One plane-wave mode of the half-space problem. kz_vac and kz_med are
// precomputed; kz_vac^2 + k_par^2 == w^2/c^2 holds as a complex identity.
struct ModeCoordinates {
  double k_par = 0.0;   // 1/m
  double phi = 0.0;     // rad, in [0, 2 pi)
  double omega = 0.0;   // rad/s
  Complex kz_vac{0.0, 0.0};
  Complex kz_med{0.0, 0.0};

  static ModeCoordinates make(double k_par, double phi, double omega,
                              const Material& mat);
};

// (kz - kz_m)/(kz + kz_m); perfect conductor short-circuits to -1.
Complex fresnel_rs(const ModeCoordinates& mode, const Material& mat);

// (eps kz - kz_m)/(eps kz + kz_m); perfect conductor short-circuits to +1.
// Limits: k_par -> 0 gives (sqrt(eps)-1)/(sqrt(eps)+1); k_par >> w/c gives
// (eps-1)/(eps+1).
Complex fresnel_rp(const ModeCoordinates& mode, const Material& mat);

struct PolarizationVectors {
  Vec3c e_s;  // (sin phi, -cos phi, 0)
  Vec3c e_p;  // (c/w) (-+ kz cos phi, -+ kz sin phi, k_par)
};

// sign = +1 for up-going, -1 for down-going waves. e_p is kept exactly as
// defined above; for evanescent modes it is not unit under the conjugated
// norm, but e_p . e_p = 1 (bilinear) always.
PolarizationVectors polarization_vectors(const ModeCoordinates& mode, int sign);

// Per-mode scattering Green tensor at coincidence r = r' = (0, 0, z_A):
//   (i / (8 pi^2 kz)) e^{2 i kz z_A} sum_sigma r_sigma e_sigma+ (x) e_sigma-
// Units 1/m under the measure  int dphi int dk_par k_par.
// Refuses k_par within a relative window 1e-12 of the vacuum branch point.
Mat3c green_mode(double z_A, const ModeCoordinates& mode, const Material& mat);

// d/dx of the first argument at coincidence: i k_par cos(phi) * green_mode.
Mat3c green_mode_dx(double z_A, const ModeCoordinates& mode, const Material& mat);

// Relative half-width of the branch-point exclusion window.
inline constexpr double kBranchPointWindow = 1e-12;

}  // namespace lcp
