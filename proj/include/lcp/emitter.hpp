#pragma once

#include "lcp/constants.hpp"
#include "lcp/planar_em.hpp"

namespace lcp {

// Circular polarization handedness of the emitted photon. sigma- conjugates
// the dipole vector (i -> -i), which flips the lateral force sign.
enum class Handedness { SigmaPlus, SigmaMinus };

// Effective two-level emitter. Defaults are the Cs D2 values:
// lambda = 852 nm, d = 1.9e-29 C m, d_10 = d (i, 0, 1), Cs-133 mass.
struct EmitterConfig {
  double wavelength = 852e-9;           // m
  double dipole_magnitude = 1.9e-29;    // C m
  Vec3c dipole_vector{Complex(0.0, 1.0), Complex(0.0, 0.0), Complex(1.0, 0.0)};
  double mass = constants::cs133_mass;  // kg
  double z_A = 0.0;                     // m, surface distance; must be > 0
  Handedness handedness = Handedness::SigmaPlus;

  // omega is always derived, never stored.
  double omega() const { return 2.0 * constants::pi * constants::c0 / wavelength; }

  // d_10 in C m, handedness applied.
  Vec3c dipole() const {
    Vec3c v = (handedness == Handedness::SigmaPlus) ? dipole_vector
                                                    : dipole_vector.conjugate().eval();
    return dipole_magnitude * v;
  }

  void validate() const;  // throws InvalidDomain
};

// Two-level populations; p0 + p1 == 1 exactly by construction
// (p1 = e^{-Gamma t}, p0 = 1 - p1).
struct Populations {
  double p0 = 0.0;
  double p1 = 1.0;
  double t = 0.0;
};

}  // namespace lcp
