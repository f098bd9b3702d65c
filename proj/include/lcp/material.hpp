#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lcp {

// Relative permittivity frozen at the transition frequency; no dispersion
// model. A perfect conductor is a flag (r_p = +1, r_s = -1 exactly), never
// eps -> infinity numerically.
struct Material {
  std::string name;
  std::complex<double> epsilon{1.0, 0.0};
  bool perfect_conductor = false;
};

// Named material table. Shipped defaults: gold (1.40 + 1.35i),
// silica (1.45 + 2.05e-7 i), pc, vacuum.
class MaterialRegistry {
 public:
  static MaterialRegistry builtin();

  // Builtin entries plus the entries of a plain-text key/value file;
  // file entries replace builtins of the same name.
  //
  //   # comment
  //   name = gold          <- starts a new entry
  //   eps_re = 1.40
  //   eps_im = 1.35
  //   perfect_conductor = 0
  static MaterialRegistry from_file(const std::string& path);

  void add(Material m);  // enforces Im(eps) >= 0 (passive medium)
  bool contains(const std::string& name) const;
  const Material& get(const std::string& name) const;  // throws UnknownMaterial
  std::vector<Material> list() const;                  // sorted by name

  // FNV-1a over the canonical serialization; recorded in output metadata.
  std::uint64_t fingerprint() const;

 private:
  std::map<std::string, Material> entries_;
};

}  // namespace lcp
