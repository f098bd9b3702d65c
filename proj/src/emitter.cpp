#include "lcp/emitter.hpp"

#include "lcp/errors.hpp"

namespace lcp {

void EmitterConfig::validate() const {
  if (!(wavelength > 0.0)) throw InvalidDomain("emitter: wavelength must be > 0");
  if (!(dipole_magnitude > 0.0)) throw InvalidDomain("emitter: dipole_magnitude must be > 0");
  if (!(mass > 0.0)) throw InvalidDomain("emitter: mass must be > 0");
  if (!(z_A > 0.0)) throw InvalidDomain("emitter: z_A must be > 0");
}

}  // namespace lcp
