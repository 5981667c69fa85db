#include "moddeg/lvalue.hpp"

#include "moddeg/errors.hpp"
#include "moddeg/special_functions.hpp"
#include "moddeg/zero_free.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace moddeg {

namespace {

constexpr double kPi = std::numbers::pi;

double log_of(const Integer& n) { return static_cast<double>(std::log(to_long_double(n))); }

}  // namespace

double symsq_lower_bound(double n2) {
  if (!(n2 >= kMinSymSquareConductor)) throw PreconditionError("symsq_lower_bound: N2 must be >= 142");
  return kSymSquareConstant / std::log(n2);
}

double symsq_lower_bound(const Integer& n2) {
  if (n2 < kMinSymSquareConductor) throw PreconditionError("symsq_lower_bound: N2 must be >= 142");
  return kSymSquareConstant / log_of(n2);
}

LineBounds rademacher_line_bounds(double t, double n2) {
  const double z = zeta_real(1.5);
  LineBounds lb;
  lb.symsq_halfline = z * z * z * std::sqrt(n2 / (8 * kPi * kPi * kPi)) * std::pow(6.25 + t * t, 0.75);
  lb.zeta_halfline = z / std::sqrt(2 * kPi) * std::sqrt(2.25 + t * t);
  return lb;
}

Lemma4Cert lemma4_certify(const Integer& n2) {
  if (n2 < kMinSymSquareConductor) throw PreconditionError("lemma4_certify: N2 must be >= 142");
  Lemma4Cert c;
  c.n2 = n2;
  const double log_n2 = log_of(n2);
  c.b = 1 - 1 / (25 * log_n2);
  c.log_x = 50.0 / 49.0 * (std::log(4e6) + log_n2);
  c.x_power = std::exp(c.log_x * (1 - c.b));
  // Gamma(1-b) = Gamma(2-b)/(1-b); 1-b is tiny.
  c.gamma_1mb = std::tgamma(2 - c.b) / (1 - c.b);
  c.gamma_bound = 25 * log_n2;
  const auto integral = lemma4_error_integral();
  c.error_integral = integral.value;
  c.error_integral_abs_error = integral.abs_error_estimate;
  c.lower_bound = kSymSquareConstant / log_n2;

  auto& w = c.report.waypoints;
  c.report.case_tag = "lemma4";
  w.push_back(Waypoint::at_least("b", c.b, 0.99));
  w.push_back(Waypoint::at_most("log_X_over_log_N2", c.log_x / log_n2, 4.2));
  w.push_back(Waypoint::at_most("exp_4.2_over_25", std::exp(4.2 / 25), 1.19));
  w.push_back(Waypoint::at_most("X_power", c.x_power, 1.19));
  w.push_back(Waypoint::at_most("gamma_1mb", c.gamma_1mb, c.gamma_bound));
  w.push_back(Waypoint::less_than("error_integral", c.error_integral, 62));
  w.push_back(Waypoint::at_most("error_integral_abs_error", c.error_integral_abs_error, 1e-6, 0.0));
  w.push_back(Waypoint::at_most("error_constant", c.error_integral / kPi, kErrorConstant));
  // 20 sqrt(N2) X^{-0.49} = 0.01 exactly for this choice of X
  const double residual =
      kErrorConstant * std::exp(0.5 * log_n2 - 0.49 * c.log_x);
  w.push_back(Waypoint::at_most("smoothing_residual", residual, 0.01, -1e-12));
  w.push_back(Waypoint::at_least("log_X_vs_first_term", c.log_x, std::log(1e6)));
  const double head = std::exp(-1e-6) - 0.01;
  w.push_back(Waypoint::at_least("implied_constant", head / (1.19 * 25), kSymSquareConstant));
  w.push_back(Waypoint::at_least("implied_constant_computed",
                                 head * log_n2 / (c.x_power * c.gamma_1mb), kSymSquareConstant));
  // b must sit inside every zero-free region.
  double narrowest = std::numeric_limits<double>::infinity();
  for (auto rc : {region_noncm(), region_cm_qi(), region_cm_zeta3()}) {
    narrowest = std::min(narrowest, rc.region_width(to_double(n2)));
  }
  w.push_back(Waypoint::at_least("region_contains_b", narrowest, 1 - c.b, 0.0));

  c.report.notes.push_back("the sign condition is applied at s = b, the left end of the zero-free interval");
  c.report.notes.push_back(
      "error integrand uses |5/2+it|^{3/2} = (25/4+t^2)^{3/4}; with the exponent typeset as 3/2 the "
      "integral is " + std::to_string(lemma4_error_integral(ErrorIntegrand::printed).value));
  return c;
}

double symsq_value_estimate(const CurveModel& curve, std::int64_t prime_cutoff) {
  if (prime_cutoff > kPointCountCutoff) throw DomainError("symsq_value_estimate: cutoff too large");
  const Invariants inv = derive_invariants(curve);
  std::vector<char> composite(static_cast<std::size_t>(std::max<std::int64_t>(prime_cutoff, 1) + 1), 0);
  double log_sum = 0;
  for (std::int64_t p = 2; p <= prime_cutoff; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    for (std::int64_t m = p * p; m <= prime_cutoff; m += p) composite[static_cast<std::size_t>(m)] = 1;
    if (mod_small(curve.conductor, p) == 0 || mod_small(inv.disc, p) == 0) continue;
    const auto ap = static_cast<double>(trace_of_frobenius(curve, inv, p));
    const double pp = static_cast<double>(p);
    // (1 - alpha^2/p^2)(1 - beta^2/p^2) with alpha + beta = a_p, alpha beta = p
    const double outer = 1 - (ap * ap - 2 * pp) / (pp * pp) + 1 / (pp * pp);
    log_sum -= std::log(outer) + std::log1p(-1 / pp);
  }
  return std::exp(log_sum);
}

}  // namespace moddeg
