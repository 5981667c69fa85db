#include "moddeg/zero_free.hpp"

#include "moddeg/errors.hpp"
#include "moddeg/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace moddeg {

namespace {

using Real = long double;

const Real kSqrt2 = std::sqrt(Real(2));

Real delta_max_of(RegionCase c) {
  switch (c) {
    case RegionCase::noncm: return 2 * (5 - 2 * std::sqrt(Real(6))) / 5;
    case RegionCase::cm_qi: return kSqrt2 + 2 - std::pow(Real(2), Real(1.75));
    case RegionCase::cm_zeta3: return (554 - 12 * std::sqrt(Real(2014))) / 261;
  }
  return 0;
}

std::array<Real, 3> quadratic_of(RegionCase c, Real d) {
  switch (c) {
    case RegionCase::noncm: return {Real(2.5) * d, Real(2.5) * d - 1, 2};
    case RegionCase::cm_qi: return {kSqrt2 * d, kSqrt2 * d - 2 * kSqrt2 + 2, 2};
    case RegionCase::cm_zeta3: return {261 * d, 261 * d - 130, 212};
  }
  return {0, 0, 0};
}

double log_ratio(const Integer& a, const Integer& b) {
  // log(a / b) without overflowing double for large conductors
  return std::log(to_long_double(a)) - std::log(to_long_double(b));
}

void require_n2(const SymPowerConductors& c) {
  if (c.n2 < kMinSymSquareConductor) {
    throw PreconditionError("symmetric-square conductor " + c.n2.str() + " is below 142");
  }
}

struct Extremal {
  double sigma;      // 1 + eta delta / L
  double sigma_zero; // sigma - (1 - beta) = 1 + (eta delta - delta) / L
};

Extremal extremal_point(const RegionConstants& rc, const Integer& n2) {
  const double L = std::log(to_double(n2) / rc.C);
  return {1 + rc.eta_delta_max / L, 1 + (rc.eta_delta_max - rc.delta_max) / L};
}

void add_endpoint_checks(CertReport& rep, const RegionConstants& rc) {
  rep.waypoints.push_back(Waypoint::vanishes(
      "endpoint_discriminant", static_cast<double>(rc.discriminant(delta_max_of(rc.tag))), 1e-12));
  rep.waypoints.push_back(Waypoint::vanishes(
      "eta_delta_endpoint", rc.eta_at(rc.delta_max) * rc.delta_max - rc.eta_delta_max, 1e-8));
}

}  // namespace

std::string to_string(RegionCase c) {
  switch (c) {
    case RegionCase::noncm: return "noncm";
    case RegionCase::cm_qi: return "cm_qi";
    case RegionCase::cm_zeta3: return "cm_zeta3";
  }
  return "?";
}

std::string to_string(ConductorSource s) {
  return s == ConductorSource::supplied ? "supplied" : "fallback_N_squared";
}

SymPowerConductors SymPowerConductors::make(const Integer& n2, RegionCase which,
                                            ConductorSource source, bool cube_exact_at_3) {
  if (n2 < 1) throw DomainError("symmetric-square conductor must be positive");
  SymPowerConductors c;
  c.n2 = n2;
  c.source = source;
  c.n4_bound = n2 * n2;
  if (which == RegionCase::cm_qi) c.n4_bound = n2;
  if (which == RegionCase::cm_zeta3) {
    SixthPowerInfo info;
    info.cube_exact_at_3 = cube_exact_at_3;
    info.n6 = n2 * n2;
    if (cube_exact_at_3) {
      if (info.n6 % 9 != 0) throw DomainError("3^3 || N requires 9 | N2^2");
      info.n4 = info.n6 / 9;
    } else {
      info.n4 = info.n6;
    }
    c.n4_bound = info.n4;
    c.n6_info = info;
  }
  return c;
}

double eta_smaller_root(double a2, double a1, double a0) {
  if (!(a2 > 0) || !(a0 > 0) || !(a1 < 0)) {
    throw DomainError("eta_smaller_root: roots are not both positive");
  }
  double disc = a1 * a1 - 4 * a2 * a0;
  if (disc < -1e-12) throw DomainError("eta_smaller_root: complex roots");
  disc = std::max(disc, 0.0);
  // 2 a0 / (-a1 + sqrt(disc)) avoids cancellation in (-a1 - sqrt(disc)) / (2 a2)
  return 2 * a0 / (-a1 + std::sqrt(disc));
}

std::array<double, 3> RegionConstants::quadratic(double delta) const {
  auto q = quadratic_of(tag, delta);
  return {static_cast<double>(q[0]), static_cast<double>(q[1]), static_cast<double>(q[2])};
}

long double RegionConstants::discriminant(long double delta) const {
  auto q = quadratic_of(tag, delta);
  return q[1] * q[1] - 4 * q[0] * q[2];
}

double RegionConstants::eta_at(double delta) const {
  if (!(delta > 0)) throw DomainError("eta_at: delta must be positive");
  // Extended precision keeps the near-double root at delta_max accurate.
  const Real d = delta;
  auto q = quadratic_of(tag, d);
  if (!(q[1] < 0)) throw DomainError("eta_at: roots are not both positive");
  Real disc = q[1] * q[1] - 4 * q[0] * q[2];
  if (disc < -1e-12L) throw DomainError("eta_at: delta beyond the endpoint");
  disc = std::max(disc, Real(0));
  return static_cast<double>(2 * q[2] / (-q[1] + std::sqrt(disc)));
}

double RegionConstants::sigma_max(double n2) const { return 1 + eta_delta_max / std::log(n2 / C); }

double RegionConstants::region_width(double n2) const { return delta_max / std::log(n2 / C); }

RegionConstants region_noncm() {
  RegionConstants rc;
  rc.tag = RegionCase::noncm;
  rc.delta_max = static_cast<double>(delta_max_of(rc.tag));
  rc.C = 96;
  rc.eta_delta_max = static_cast<double>(2 * (std::sqrt(Real(6)) - 2) / 5);
  return rc;
}

RegionConstants region_cm_qi() {
  RegionConstants rc;
  rc.tag = RegionCase::cm_qi;
  rc.delta_max = static_cast<double>(delta_max_of(rc.tag));
  rc.C = 100;
  rc.eta_delta_max = static_cast<double>(kSqrt2 * (std::pow(Real(2), Real(0.25)) - 1));
  return rc;
}

RegionConstants region_cm_zeta3() {
  RegionConstants rc;
  rc.tag = RegionCase::cm_zeta3;
  rc.delta_max = static_cast<double>(delta_max_of(rc.tag));
  rc.C = 64;
  rc.eta_delta_max = static_cast<double>((6 * std::sqrt(Real(2014)) - 212) / 261);
  return rc;
}

RegionConstants region_for(RegionCase c) {
  switch (c) {
    case RegionCase::noncm: return region_noncm();
    case RegionCase::cm_qi: return region_cm_qi();
    case RegionCase::cm_zeta3: return region_cm_zeta3();
  }
  return region_noncm();
}

CertReport certify_noncm(const SymPowerConductors& cond) {
  require_n2(cond);
  const auto rc = region_noncm();
  const auto [sigma, sigma_zero] = extremal_point(rc, cond.n2);
  const double pi = std::numbers::pi;

  CertReport rep;
  rep.case_tag = to_string(rc.tag);
  // 1.46 is printed to two places; the computed value only has to round to it.
  rep.waypoints.push_back(Waypoint::at_most("sigma_max", sigma, 1.46, -0.005));
  const double digamma_sum = 3 * digamma(sigma / 2) + 4 * digamma(sigma + 1) +
                             3 * digamma((sigma + 1) / 2) + digamma(sigma + 2);
  rep.waypoints.push_back(Waypoint::at_most("digamma_sum", digamma_sum, 1.74));
  const double middle = 2 / sigma - 3 / sigma_zero;
  rep.waypoints.push_back(Waypoint::at_most("middle_term", middle, -0.84));
  const double log32pi8 = std::log(32.0) + 8 * std::log(pi);
  rep.waypoints.push_back(Waypoint::within("log_32pi8", log32pi8, 12.62, 12.63));
  rep.waypoints.push_back(
      Waypoint::at_most("n4_correction", 0.5 * log_ratio(cond.n4_bound, cond.n2 * cond.n2), 0.0, 0.0));
  const double total = -0.84 - log32pi8 + 1.74 + 2.5 * std::log(96.0);
  rep.waypoints.push_back(Waypoint::at_most("contradiction_total", total, -0.30));
  add_endpoint_checks(rep, rc);
  rep.notes.push_back(
      "eta*delta is maximised at delta = 2(5-2sqrt6)/5 (the endpoint where the quadratic's discriminant "
      "vanishes); (5-2sqrt6)/5 is not the endpoint");
  return rep;
}

CertReport certify_cm_qi(const SymPowerConductors& cond) {
  require_n2(cond);
  const auto rc = region_cm_qi();
  const auto [sigma, sigma_zero] = extremal_point(rc, cond.n2);
  const double pi = std::numbers::pi;
  const double sqrt2 = std::numbers::sqrt2;

  CertReport rep;
  rep.case_tag = to_string(rc.tag);
  rep.waypoints.push_back(Waypoint::at_most("sigma_max", sigma, 1.8));
  const double gamma_terms = 2 * digamma(sigma / 2) + 2 * sqrt2 * digamma(sigma + 1) + digamma(sigma + 2);
  rep.waypoints.push_back(Waypoint::at_most("gamma_terms", gamma_terms, 2.821));
  const double middle = 2 / sigma - 2 * sqrt2 / sigma_zero;
  rep.waypoints.push_back(Waypoint::at_most("middle_term", middle, -0.612));
  const double constant = -(2 * std::log(1 / pi) + 2 * sqrt2 * std::log(1 / (4 * pi)));
  rep.waypoints.push_back(Waypoint::within("log_pi_constant", constant, 9.447, 9.449));
  rep.waypoints.push_back(
      Waypoint::vanishes("n4_equals_n2", log_ratio(cond.n4_bound, cond.n2), 0.0));
  const double total = -0.612 - constant + 2.821 + sqrt2 * std::log(static_cast<double>(rc.C));
  rep.waypoints.push_back(Waypoint::at_most("contradiction_total", total, -0.726, -0.0005));
  add_endpoint_checks(rep, rc);
  rep.notes.push_back("C = 100 is used for the Q(i) region rather than C = 64");
  return rep;
}

CertReport certify_cm_zeta3(const SymPowerConductors& cond) {
  require_n2(cond);
  const auto rc = region_cm_zeta3();
  const auto [sigma, sigma_zero] = extremal_point(rc, cond.n2);
  const double pi = std::numbers::pi;

  CertReport rep;
  rep.case_tag = to_string(rc.tag);
  rep.waypoints.push_back(Waypoint::at_most("sigma_max", sigma, 1.28));
  const double gamma_sum = 106 * digamma(sigma / 2) + 171 * digamma(sigma + 1) +
                           90 * digamma(sigma + 2) + 25 * digamma(sigma + 3);
  rep.waypoints.push_back(Waypoint::less_than("gamma_sum", gamma_sum, 153));
  const double middle = 106 / sigma - 171 / sigma_zero;
  rep.waypoints.push_back(Waypoint::at_most("middle_term", middle, -59));
  const double block = 339 * std::log(1 / pi) - (53 * std::log(3.0) + 286 * std::log(2.0));
  rep.waypoints.push_back(Waypoint::within("constant_block", block, -645, -644));
  const double log_c = 130.5 * std::log(static_cast<double>(rc.C));
  rep.waypoints.push_back(Waypoint::within("log_C_term", log_c, 542, 543));
  double correction = 0;
  if (cond.n6_info) {
    const auto& info = *cond.n6_info;
    correction = 45 * log_ratio(info.n4, cond.n2 * cond.n2) + 12.5 * log_ratio(info.n6, info.n4);
  } else {
    correction = 45 * log_ratio(cond.n4_bound, cond.n2 * cond.n2);
  }
  rep.waypoints.push_back(Waypoint::at_most("conductor_correction", correction, 0.0, 0.0));
  const double total = -59 + block + log_c + 153 + correction;
  rep.waypoints.push_back(Waypoint::at_most("contradiction_total", total, -7));
  add_endpoint_checks(rep, rc);
  return rep;
}

CertReport certify_region(RegionCase c, const SymPowerConductors& n2) {
  switch (c) {
    case RegionCase::noncm: return certify_noncm(n2);
    case RegionCase::cm_qi: return certify_cm_qi(n2);
    case RegionCase::cm_zeta3: return certify_cm_zeta3(n2);
  }
  return certify_noncm(n2);
}

std::array<Rational, 4> trig_poly_expand(const Rational& beta) {
  // (1 + c)(1 + beta c)^2 = 1 + (2 beta + 1) c + (beta^2 + 2 beta) c^2 + beta^2 c^3
  // with c^2 = (1 + cos 2t)/2 and c^3 = (3 cos t + cos 3t)/4.
  const Rational b2 = beta * beta;
  const Rational quad = b2 + 2 * beta;
  return {1 + quad / 2, 2 * beta + 1 + 3 * b2 / 4, quad / 2, b2 / 4};
}

std::array<double, 4> trig_poly_expand(double beta) {
  const double b2 = beta * beta;
  const double quad = b2 + 2 * beta;
  return {1 + quad / 2, 2 * beta + 1 + 0.75 * b2, quad / 2, b2 / 4};
}

std::array<double, 4> trig_poly_qi() { return {2, 2 * std::numbers::sqrt2, 1, 0}; }

double trig_poly_eval(const std::array<double, 4>& c, double theta) {
  return c[0] + c[1] * std::cos(theta) + c[2] * std::cos(2 * theta) + c[3] * std::cos(3 * theta);
}

double trig_poly_grid_min(const std::array<double, 4>& c, int points) {
  double lo = std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    lo = std::min(lo, trig_poly_eval(c, 2 * std::numbers::pi * i / points));
  }
  return lo;
}

double quintic(double x) { return ((((x - 25) * x - 4) * x + 30) * x + 19) * x + 3; }

QuinticOptimum quintic_beta_optimum() {
  // p(1) = 24 > 0 > p(2) = -239. The other positive root (about 25.11) gives a
  // polynomial that is not the optimum.
  double lo = 1;
  double hi = 2;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (quintic(mid) > 0) lo = mid;
    else hi = mid;
  }
  const double root = 0.5 * (lo + hi);
  return {root, 2 * root};
}

}  // namespace moddeg
