#pragma once

#include <stdexcept>
#include <string>

namespace lcp {

// Quadrature failed to reach the requested tolerance within the
// subdivision / evaluation budget.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double error_estimate, long n_evaluations)
      : std::runtime_error(what),
        error_estimate(error_estimate),
        n_evaluations(n_evaluations) {}
  double error_estimate;
  long n_evaluations;
};

class InvalidDomain : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// k_par inside the exclusion window around the vacuum branch point k_par = w/c.
class BranchPointProximity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnknownMaterial : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace lcp
