#pragma once

#include "lcp/emitter.hpp"
#include "lcp/material.hpp"
#include "lcp/quadrature.hpp"

namespace lcp {

// Angular decomposition of the momentum-weighted emission spectrum
//   Gbar(z_A, phi) = A + B cos(phi) + C cos^2(phi) + D sin^2(phi).
// Each coefficient is a k_par integral at fixed z_A; units are N (momentum
// per unit time per unit angle, as the spectrum is weighted by hbar k_par).
// B carries the full x asymmetry: F_x(t=0) = -pi B.
struct SpectrumCoefficients {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
  double z_A = 0.0;
  double abs_error_estimate = 0.0;  // summed quadrature errors of the four integrals
};

// Per-mode emission rate density
//   gamma(z_A, k) = (2 mu0 / hbar) w^2 Im{ d . G^(1)(z_A, k) . d* },
// rate per d^2 k_par; integrating k_par dk_par dphi recovers surface_rate.
// Valid for arbitrary dipole vectors.
double emission_rate_density(const EmitterConfig& cfg, const Material& mat,
                             double k_par, double phi,
                             const QuadratureConfig& qcfg = {});

// The four coefficients for the rotating dipole configuration d (i, 0, 1).
// Results are cached keyed on (material, z_A, emitter, tolerances); the cache
// is safe for concurrent readers with single-writer insertion.
SpectrumCoefficients spectrum_coefficients(const EmitterConfig& cfg, const Material& mat,
                                           const QuadratureConfig& qcfg = {});

// Gbar(z_A, phi) evaluated from the cached coefficients.
double angular_spectrum(const EmitterConfig& cfg, const Material& mat, double phi,
                        const QuadratureConfig& qcfg = {});

// Half-plane emission difference
//   int_{-pi/2}^{pi/2} Gbar dphi - int_{pi/2}^{3pi/2} Gbar dphi = 4 B(z_A);
// positive means stronger emission in +x.
double asymmetry(const EmitterConfig& cfg, const Material& mat,
                 const QuadratureConfig& qcfg = {});

}  // namespace lcp
