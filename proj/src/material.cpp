#include "lcp/material.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lcp/errors.hpp"

namespace lcp {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& v) {
  return v == "1" || v == "true" || v == "yes" || v == "on";
}

}  // namespace

MaterialRegistry MaterialRegistry::builtin() {
  MaterialRegistry r;
  r.add({"gold", {1.40, 1.35}, false});
  r.add({"silica", {1.45, 2.05e-7}, false});
  r.add({"pc", {1.0, 0.0}, true});
  r.add({"vacuum", {1.0, 0.0}, false});
  return r;
}

void MaterialRegistry::add(Material m) {
  if (m.name.empty()) throw InvalidDomain("material: empty name");
  if (m.epsilon.imag() < 0.0)
    throw InvalidDomain("material '" + m.name + "': Im(eps) must be >= 0 (passive medium)");
  entries_[m.name] = std::move(m);
}

bool MaterialRegistry::contains(const std::string& name) const {
  return entries_.count(name) != 0;
}

const Material& MaterialRegistry::get(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw UnknownMaterial("unknown material '" + name + "'");
  return it->second;
}

std::vector<Material> MaterialRegistry::list() const {
  std::vector<Material> out;
  out.reserve(entries_.size());
  for (const auto& [_, m] : entries_) out.push_back(m);
  return out;
}

MaterialRegistry MaterialRegistry::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidDomain("cannot open material registry file '" + path + "'");

  MaterialRegistry r = builtin();
  Material cur;
  bool open = false;
  auto flush = [&] {
    if (open) r.add(cur);
    cur = Material{};
    open = false;
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidDomain("registry file " + path + ": line " + std::to_string(lineno) +
                          " is not 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "name") {
      flush();
      cur.name = val;
      open = true;
    } else if (key == "eps_re") {
      cur.epsilon = {std::stod(val), cur.epsilon.imag()};
    } else if (key == "eps_im") {
      cur.epsilon = {cur.epsilon.real(), std::stod(val)};
    } else if (key == "perfect_conductor") {
      cur.perfect_conductor = parse_bool(val);
    } else {
      throw InvalidDomain("registry file " + path + ": unknown key '" + key + "'");
    }
  }
  flush();
  return r;
}

std::uint64_t MaterialRegistry::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a offset basis
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  char buf[128];
  for (const auto& [name, m] : entries_) {
    std::snprintf(buf, sizeof buf, "%s:%.17g:%.17g:%d;", name.c_str(), m.epsilon.real(),
                  m.epsilon.imag(), m.perfect_conductor ? 1 : 0);
    mix(buf);
  }
  return h;
}

}  // namespace lcp
