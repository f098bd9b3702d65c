#pragma once

#include <complex>
#include <functional>

#include "lcp/errors.hpp"

namespace lcp {

struct QuadratureConfig {
  double rel_tol = 1e-9;    // in (0, 1e-3]
  double abs_tol = 0.0;     // absolute floor added to the target
  int max_subdivisions = 4000;
  double tail_exponent_cutoff = 40.0;  // Lambda; evanescent tail cut at kappa = Lambda/(2 z)

  void validate() const;  // throws InvalidDomain
};

struct QuadratureResult {
  std::complex<double> value{0.0, 0.0};
  double abs_error_estimate = 0.0;
  long n_evaluations = 0;
  // Where the evanescent tail was cut, as a k_par value (> w/c for any
  // converged spectrum integral). 0 for azimuth integrals.
  double truncation_k = 0.0;
};

// int_0^inf dk_par f(k_par) for integrands that oscillate as e^{2 i kz z} on
// [0, w/c] and decay as e^{-2 kappa z} beyond, with an integrable 1/kz branch
// point at k_par = w/c.
//
// Propagating sector: k_par = (w/c) sin(theta) removes the 1/kz singularity;
// evanescent sector: kappa = sqrt(k_par^2 - w^2/c^2) makes the decay explicit
// and is truncated at kappa = Lambda/(2 z) with a bound on the discarded tail
// added to the error estimate. Both sectors share one worst-interval-first
// adaptive Gauss-Kronrod 7/15 loop; summation order is fixed, results are
// bit-reproducible.
QuadratureResult integrate_spectrum(const std::function<std::complex<double>(double)>& f,
                                    double omega, double z_A,
                                    const QuadratureConfig& cfg = {});

// int_0^{2 pi} dphi g(phi) for 2 pi periodic g: trapezoid rule with point
// doubling, exact for trigonometric polynomials of degree < N.
QuadratureResult integrate_azimuth(const std::function<std::complex<double>(double)>& g,
                                   const QuadratureConfig& cfg = {});

// Hard cap on integrand evaluations per call (near-field stress guard).
inline constexpr long kMaxEvaluations = 10'000'000;

// Spectrum samples keep at least this relative distance from the light line
// k_par = w/c, strictly outside the branch-point refusal window of the mode
// functions; the omitted slivers enter abs_error_estimate.
inline constexpr double kLightLineMargin = 2e-12;

}  // namespace lcp
