#pragma once

namespace lcp::constants {

inline constexpr double pi = 3.14159265358979323846;

// SI values (CODATA 2018)
inline constexpr double c0 = 299792458.0;          // m/s
inline constexpr double eps0 = 8.8541878128e-12;   // F/m
inline constexpr double hbar = 1.054571817e-34;    // J s

// mu0 derived from eps0 and c0 so that mu0*eps0*c0^2 == 1 holds exactly:
// the Green-tensor route (mu0 prefactors) and the closed forms (1/eps0
// prefactors) must share prefactors to rounding.
inline constexpr double mu0 = 1.0 / (eps0 * c0 * c0);

// Cs-133; needed only for the recoil-velocity observable.
inline constexpr double cs133_mass = 2.2069e-25;   // kg

}  // namespace lcp::constants
