#pragma once

#include <vector>

#include "lcp/emitter.hpp"
#include "lcp/material.hpp"
#include "lcp/quadrature.hpp"

namespace lcp {

enum class ForceRegime { Full, PerfectConductor, NearField, Retarded, General };

const char* to_string(ForceRegime r);

// Lateral force value (x component, N) with its evaluation context.
struct ForceSample {
  double value = 0.0;          // N
  ForceRegime regime = ForceRegime::Full;
  double t = 0.0;              // s
  double error_estimate = 0.0; // N; 0 for closed forms
};

// Which Gamma enters e^{-Gamma t} and v = F/(m Gamma): the position-dependent
// total rate (default) or the free-space rate.
enum class GammaMode { Total, FreeSpace };

// Free-space rate Gamma_0 = w^3 (2 d^2) / (3 pi eps0 hbar c^3); the circular
// dipole d (i, 0, 1) has total norm |d_10|^2 = 2 d^2.
double free_space_rate(const EmitterConfig& cfg);

// Surface-assisted rate Gamma^(1)(z_A): phi- and k_par-integrated per-mode
// tensor contracted with the actual dipole vector. Valid for any dipole.
double surface_rate(const EmitterConfig& cfg, const Material& mat,
                    const QuadratureConfig& qcfg = {});

// Gamma_0 + Gamma^(1) (or Gamma_0 alone); guards against non-positive totals.
double total_rate(const EmitterConfig& cfg, const Material& mat,
                  GammaMode mode = GammaMode::Total,
                  const QuadratureConfig& qcfg = {});

// p1 = e^{-gamma t}, p0 = 1 - p1 (initial conditions p0(0) = 0, p1(0) = 1).
Populations populations(double t, double gamma);

// Full numerically integrated lateral force for the rotating dipole
// configuration d (i, 0, 1):
//   F_x = -e^{-Gamma t} (d^2 / 2 pi eps0) Im int dk k^3 e^{2 i kz z_A} r_p,
// sign flipped for sigma-.
ForceSample lateral_force(const EmitterConfig& cfg, const Material& mat,
                          double t = 0.0, GammaMode gmode = GammaMode::Total,
                          const QuadratureConfig& qcfg = {});

// One downward transition |n> -> |k>: dipole d_nk in C m, frequency w_nk,
// population p_n of the upper state.
struct Transition {
  Vec3c dipole;
  double omega = 0.0;
  double population = 0.0;
};

// Population-weighted recoil force
//   F_x = 2 mu0 sum_n p_n w_n^2 Re{ d_n . (dx G^(1)) . d_n* }
// via contraction with the phi-integrated green_mode_dx tensor. Works for
// arbitrary (also real) dipole vectors; real dipoles give zero because the
// phi-integrated dx tensor is antisymmetric.
ForceSample lateral_force_general(const std::vector<Transition>& transitions,
                                  const Material& mat, double z_A,
                                  const QuadratureConfig& qcfg = {});

// Closed form above a perfect conductor (r_p = 1):
//   e^{-Gamma t} { 3 d^2/(4 eps0 lambda z^3) cos(4 pi z/lambda)
//                  + d^2/eps0 (pi/(lambda^2 z^2) - 3/(16 pi z^4)) sin(4 pi z/lambda) }
ForceSample lateral_force_pc(const EmitterConfig& cfg, double t = 0.0,
                             GammaMode gmode = GammaMode::Total,
                             const QuadratureConfig& qcfg = {});

// Non-retarded closed form -e^{-Gamma t} (3 d^2 / 8 pi eps0 z^4) Im eps/|eps+1|^2.
// Requires a finite (lossy) permittivity, not the perfect-conductor flag.
ForceSample lateral_force_near(const EmitterConfig& cfg, const Material& mat,
                               double t = 0.0, GammaMode gmode = GammaMode::Total,
                               const QuadratureConfig& qcfg = {});

// Retarded closed form with r_p -> (sqrt(eps)-1)/(sqrt(eps)+1).
ForceSample lateral_force_retarded(const EmitterConfig& cfg, const Material& mat,
                                   double t = 0.0, GammaMode gmode = GammaMode::Total,
                                   const QuadratureConfig& qcfg = {});

// y component of curl F = dF_x/dz_A for the perfect conductor at t = 0, N/m.
// Nonzero: the lateral CP force is not conservative.
double force_curl_pc(const EmitterConfig& cfg);

// Mean recoil velocity v = F_x(z_A, 0) / (m Gamma), m/s.
double recoil_velocity(const EmitterConfig& cfg, const Material& mat,
                       GammaMode gmode = GammaMode::Total,
                       const QuadratureConfig& qcfg = {});

// Azimuth-integrated mode tensors at fixed k_par (numeric phi integration).
Mat3c phi_integrated_green(double z_A, double k_par, double omega,
                           const Material& mat, const QuadratureConfig& qcfg = {});
Mat3c phi_integrated_green_dx(double z_A, double k_par, double omega,
                              const Material& mat, const QuadratureConfig& qcfg = {});

}  // namespace lcp
