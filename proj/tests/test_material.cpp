#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "lcp/errors.hpp"
#include "lcp/material.hpp"

using namespace lcp;

TEST_CASE("builtin registry carries the shipped defaults") {
  const auto r = MaterialRegistry::builtin();
  CHECK(r.get("gold").epsilon == std::complex<double>(1.40, 1.35));
  CHECK(r.get("silica").epsilon == std::complex<double>(1.45, 2.05e-7));
  CHECK(r.get("pc").perfect_conductor);
  CHECK(r.get("vacuum").epsilon == std::complex<double>(1.0, 0.0));
  CHECK_FALSE(r.get("vacuum").perfect_conductor);
  CHECK(r.list().size() == 4);
}

TEST_CASE("unknown material raises") {
  const auto r = MaterialRegistry::builtin();
  CHECK_FALSE(r.contains("unobtainium"));
  CHECK_THROWS_AS(r.get("unobtainium"), UnknownMaterial);
}

TEST_CASE("passivity enforced") {
  MaterialRegistry r;
  CHECK_THROWS_AS(r.add({"gainy", {2.0, -0.1}, false}), InvalidDomain);
  CHECK_NOTHROW(r.add({"ok", {2.0, 0.0}, false}));
}

TEST_CASE("registry file parsing: new entries and overrides") {
  const std::string path = "test_materials_tmp.cfg";
  {
    std::ofstream f(path);
    f << "# test registry\n"
      << "name = glass\n"
      << "eps_re = 2.25\n"
      << "eps_im = 0\n"
      << "\n"
      << "name = gold  # override the builtin\n"
      << "eps_re = 1.5\n"
      << "eps_im = 1.2\n"
      << "perfect_conductor = 0\n";
  }
  const auto r = MaterialRegistry::from_file(path);
  CHECK(r.get("glass").epsilon == std::complex<double>(2.25, 0.0));
  CHECK(r.get("gold").epsilon == std::complex<double>(1.5, 1.2));
  CHECK(r.contains("silica"));  // builtins still present
  std::remove(path.c_str());
}

TEST_CASE("registry file errors") {
  CHECK_THROWS_AS(MaterialRegistry::from_file("does_not_exist.cfg"), InvalidDomain);

  const std::string path = "test_materials_bad_tmp.cfg";
  {
    std::ofstream f(path);
    f << "name = x\nnot_a_key = 3\n";
  }
  CHECK_THROWS_AS(MaterialRegistry::from_file(path), InvalidDomain);
  std::remove(path.c_str());
}

TEST_CASE("fingerprint tracks content") {
  const auto a = MaterialRegistry::builtin();
  auto b = MaterialRegistry::builtin();
  CHECK(a.fingerprint() == b.fingerprint());
  b.add({"glass", {2.25, 0.0}, false});
  CHECK(a.fingerprint() != b.fingerprint());
}
