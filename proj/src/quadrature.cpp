#include "lcp/quadrature.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <vector>

#include "lcp/constants.hpp"

namespace lcp {

namespace {

using Complex = std::complex<double>;
using Integrand = std::function<Complex(double)>;

// QUADPACK dqk15 nodes and weights on [-1, 1]; xgk[1], xgk[3], xgk[5] and the
// center are the embedded Gauss-7 nodes.
constexpr double xgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double wgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502,
    0.1406532597155259,  0.1690047266392679,  0.1903505780647854,
    0.2044329400752989,  0.2094821410847278};
constexpr double wg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct GK {
  Complex value;
  double err;
};

GK gk15(const Integrand& f, double a, double b, long& n_evals) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);

  const Complex fc = f(c);
  ++n_evals;
  Complex resk = wgk[7] * fc;
  Complex resg = wg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const Complex fl = f(c - h * xgk[j]);
    const Complex fr = f(c + h * xgk[j]);
    n_evals += 2;
    resk += wgk[j] * (fl + fr);
    if (j % 2 == 1) resg += wg[j / 2] * (fl + fr);
  }
  resk *= h;
  resg *= h;
  return {resk, std::abs(resk - resg)};
}

struct Interval {
  double a, b;
  Complex value;
  double err;
  int sector;  // 0 propagating, 1 evanescent: fixes the final summation order
};

// worst error first; ties broken by position so the refinement order is
// deterministic
struct WorseThan {
  bool operator()(const Interval& x, const Interval& y) const {
    if (x.err != y.err) return x.err < y.err;
    if (x.sector != y.sector) return x.sector > y.sector;
    return x.a > y.a;
  }
};

struct AdaptiveState {
  std::vector<Interval> heap;
  Complex total{0.0, 0.0};
  double toterr = 0.0;
  double l1 = 0.0;  // sum of |interval value|: cancellation witness
  long n_evals = 0;
  int n_subdivisions = 0;
};

void push_interval(AdaptiveState& s, const Integrand& f, int sector, double a, double b) {
  const GK r = gk15(f, a, b, s.n_evals);
  s.heap.push_back({a, b, r.value, r.err, sector});
  std::push_heap(s.heap.begin(), s.heap.end(), WorseThan{});
  s.total += r.value;
  s.toterr += r.err;
  s.l1 += std::abs(r.value);
}

QuadratureResult adapt(AdaptiveState& s, const Integrand& f_prop, const Integrand& f_evan,
                       double tail_bound, const QuadratureConfig& cfg) {
  // the 50 eps l1 term stops futile refinement of integrals that cancel to
  // rounding noise; the reported error estimate stays honest
  const auto target = [&] {
    return std::max({cfg.abs_tol, cfg.rel_tol * std::abs(s.total),
                     50.0 * DBL_EPSILON * s.l1});
  };

  while (s.toterr + tail_bound > target()) {
    if (s.n_subdivisions >= cfg.max_subdivisions)
      throw NonConvergence("integrate_spectrum: max_subdivisions reached with error " +
                               std::to_string(s.toterr + tail_bound),
                           s.toterr + tail_bound, s.n_evals);
    if (s.n_evals > kMaxEvaluations)
      throw NonConvergence("integrate_spectrum: evaluation cap reached",
                           s.toterr + tail_bound, s.n_evals);

    std::pop_heap(s.heap.begin(), s.heap.end(), WorseThan{});
    const Interval worst = s.heap.back();
    s.heap.pop_back();
    if (worst.b - worst.a <=
        std::max(std::abs(worst.a), std::abs(worst.b)) * 4.0 * DBL_EPSILON)
      throw NonConvergence("integrate_spectrum: interval underflow with error " +
                               std::to_string(s.toterr + tail_bound),
                           s.toterr + tail_bound, s.n_evals);
    s.total -= worst.value;
    s.toterr -= worst.err;
    s.l1 -= std::abs(worst.value);

    const double mid = 0.5 * (worst.a + worst.b);
    const Integrand& f = (worst.sector == 0) ? f_prop : f_evan;
    push_interval(s, f, worst.sector, worst.a, mid);
    push_interval(s, f, worst.sector, mid, worst.b);
    ++s.n_subdivisions;
  }

  // fixed deterministic summation order: sector, then left endpoint
  std::sort(s.heap.begin(), s.heap.end(), [](const Interval& x, const Interval& y) {
    if (x.sector != y.sector) return x.sector < y.sector;
    return x.a < y.a;
  });
  Complex value{0.0, 0.0};
  double err = tail_bound;
  for (const Interval& iv : s.heap) {
    value += iv.value;
    err += iv.err;
  }

  QuadratureResult res;
  res.value = value;
  res.abs_error_estimate = err;
  res.n_evaluations = s.n_evals;
  return res;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || rel_tol > 1e-3)
    throw InvalidDomain("QuadratureConfig: rel_tol must be in (0, 1e-3]");
  if (abs_tol < 0.0) throw InvalidDomain("QuadratureConfig: abs_tol must be >= 0");
  if (max_subdivisions < 1)
    throw InvalidDomain("QuadratureConfig: max_subdivisions must be >= 1");
  if (tail_exponent_cutoff < 20.0)
    throw InvalidDomain("QuadratureConfig: tail_exponent_cutoff must be >= 20");
}

QuadratureResult integrate_spectrum(const Integrand& f, double omega, double z_A,
                                    const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(z_A > 0.0)) throw InvalidDomain("integrate_spectrum: z_A must be > 0");
  if (!(omega > 0.0)) throw InvalidDomain("integrate_spectrum: omega must be > 0");

  const double k0 = omega / constants::c0;
  const double kappa_max = cfg.tail_exponent_cutoff / (2.0 * z_A);

  // Sector ends stop a relative kLightLineMargin short of k_par = k0 on both
  // sides: node placement then never enters the branch-point refusal window
  // of the mode functions, however deep the refinement goes. The omitted
  // slivers are O(margin) relative and are added to the error estimate.
  const double theta_max = std::asin(1.0 - kLightLineMargin);
  const double kappa_min = k0 * std::sqrt(2.0 * kLightLineMargin);

  // propagating sector, k_par = k0 sin(theta): the cos(theta) Jacobian
  // cancels the 1/kz branch-point singularity
  const Integrand f_prop = [&f, k0](double theta) {
    return f(k0 * std::sin(theta)) * (k0 * std::cos(theta));
  };
  // evanescent sector, kappa = sqrt(k_par^2 - k0^2)
  const Integrand f_evan = [&f, k0](double kappa) {
    const double kp = std::hypot(k0, kappa);
    return f(kp) * (kappa / kp);
  };

  AdaptiveState s;

  // theta seeds: equal pieces so large 2 k z oscillations register in the
  // initial error estimates
  const int n_theta = 8;
  for (int i = 0; i < n_theta; ++i) {
    const double a = theta_max * i / n_theta;
    const double b = theta_max * (i + 1) / n_theta;
    push_interval(s, f_prop, 0, a, b);
  }

  // kappa seeds: geometric ladder anchored at the light line, so structure at
  // kappa ~ k0 (medium branch point, TIR band) is always resolved even when
  // kappa_max >> k0
  double truncation_bounds = 0.0;
  if (kappa_max > kappa_min) {
    std::vector<double> cuts;
    cuts.push_back(kappa_min);
    for (double c = 0.5 * k0; c < kappa_max; c *= 2.0)
      if (c > kappa_min) cuts.push_back(c);
    cuts.push_back(kappa_max);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      push_interval(s, f_evan, 1, cuts[i], cuts[i + 1]);

    // discarded tail: |g(kappa_max)| times int (kappa/kappa_max)^3
    // e^{-2 (kappa - kappa_max) z} dkappa — a cushion for the k^3-type
    // growth of the spectrum integrands
    const double L = cfg.tail_exponent_cutoff;
    const double gm = std::abs(f_evan(kappa_max));
    s.n_evals += 1;
    truncation_bounds +=
        gm / (2.0 * z_A) * (1.0 + 3.0 / L + 6.0 / (L * L) + 6.0 / (L * L * L));
  }

  // light-line slivers, O(margin) relative: reported in the estimate but not
  // part of the stop criterion (they are not reducible by refinement)
  const double sliver_prop =
      std::abs(f_prop(theta_max)) * (0.5 * constants::pi - theta_max);
  const double sliver_evan = std::abs(f_evan(std::min(kappa_min, kappa_max))) * kappa_min;
  s.n_evals += 2;

  QuadratureResult res = adapt(s, f_prop, f_evan, truncation_bounds, cfg);
  res.abs_error_estimate += sliver_prop + sliver_evan;
  res.truncation_k = std::hypot(k0, kappa_max);
  return res;
}

QuadratureResult integrate_azimuth(const Integrand& g, const QuadratureConfig& cfg) {
  cfg.validate();
  const double two_pi = 2.0 * constants::pi;

  long n_evals = 0;
  int n = 16;
  Complex sum{0.0, 0.0};
  double l1 = 0.0;
  for (int j = 0; j < n; ++j) {
    const Complex v = g(two_pi * j / n);
    sum += v;
    l1 += std::abs(v);
    ++n_evals;
  }
  Complex prev = sum * (two_pi / n);

  constexpr int kMaxPoints = 1 << 20;
  while (true) {
    // midpoints only; previous nodes are reused through the running sum
    for (int j = 0; j < n; ++j) {
      const Complex v = g(two_pi * (2 * j + 1) / (2 * n));
      sum += v;
      l1 += std::abs(v);
      ++n_evals;
    }
    n *= 2;
    const Complex cur = sum * (two_pi / n);
    const double err = std::abs(cur - prev);
    const double floor = 50.0 * DBL_EPSILON * l1 * (two_pi / n);
    if (err <= std::max({cfg.abs_tol, cfg.rel_tol * std::abs(cur), floor})) {
      QuadratureResult res;
      res.value = cur;
      res.abs_error_estimate = err;
      res.n_evaluations = n_evals;
      res.truncation_k = 0.0;
      return res;
    }
    prev = cur;
    if (n >= kMaxPoints)
      throw NonConvergence("integrate_azimuth: rule doubling exhausted", err, n_evals);
  }
}

}  // namespace lcp
