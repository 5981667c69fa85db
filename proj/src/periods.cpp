#include "moddeg/periods.hpp"

#include "moddeg/errors.hpp"

#include <cmath>
#include <numbers>

namespace moddeg {

namespace {
constexpr double kPi = std::numbers::pi;
}

double agm(double x, double y) {
  if (!(x > 0) || !(y > 0)) throw DomainError("agm: arguments must be positive");
  double a = x;
  double b = y;
  for (int it = 0; it < 64; ++it) {
    if (std::abs(a - b) <= 1e-15 * a) break;
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return a;
}

PeriodData area_pos_disc(double e1, double e2, double e3) {
  if (!(e1 > e2 && e2 > e3)) throw DomainError("area_pos_disc: need e1 > e2 > e3");
  PeriodData pd;
  pd.case_tag = PeriodCase::pos_disc;
  pd.real_period = kPi / agm(std::sqrt(e1 - e2), std::sqrt(e1 - e3));
  pd.imag_part = kPi / agm(std::sqrt(e2 - e3), std::sqrt(e1 - e3));
  pd.omega = pd.real_period * pd.imag_part;
  pd.inv_omega = 1.0 / pd.omega;
  pd.t_or_c = (e1 - e2) / (e1 - e3);
  return pd;
}

PeriodData area_neg_disc(double r, const Integer& b2_exact, const Integer& b4_exact) {
  const double b2 = to_double(b2_exact);
  const double b4 = to_double(b4_exact);
  const double a = 3 * r + b2 / 4;
  const double bsq = 3 * r * r + b2 * r / 2 + b4 / 2;
  if (!(bsq > 0)) throw DomainError("area_neg_disc: B^2 must be positive");
  const double b = std::sqrt(bsq);
  if (!(2 * b > std::abs(a))) throw DomainError("area_neg_disc: need 2B > |A|");
  PeriodData pd;
  pd.case_tag = PeriodCase::neg_disc;
  pd.real_period = 2 * kPi / agm(2 * std::sqrt(b), std::sqrt(2 * b + a));
  pd.imag_part = kPi / agm(2 * std::sqrt(b), std::sqrt(2 * b - a));
  pd.omega = pd.real_period * pd.imag_part;
  pd.inv_omega = 1.0 / pd.omega;
  // A = 3 r_tilde and B^2 = (3 r_tilde / 2)^2 + Z^2
  const double z = std::sqrt(std::max(bsq - a * a / 4, 0.0));
  pd.t_or_c = (a / 3) / z;
  return pd;
}

PeriodData periods(const Invariants& inv, const RootData& roots) {
  if (roots.kind == RootKind::three_real) return area_pos_disc(roots.e1, roots.e2, roots.e3);
  return area_neg_disc(roots.r, inv.b2, inv.b4);
}

double shape_factor_pos(double t) {
  if (!(t > 0 && t < 1)) throw DomainError("shape_factor_pos: need 0 < t < 1");
  return agm(1.0, std::sqrt(t)) * agm(1.0, std::sqrt(1 - t)) / std::cbrt(4 * t * (1 - t));
}

double shape_factor_neg(double c) {
  const double w = 3 * c / std::sqrt(16 + 36 * c * c);
  return std::pow(1 + 9 * c * c / 4, 1.0 / 6) * agm(1.0, std::sqrt(0.5 + w)) *
         agm(1.0, std::sqrt(0.5 - w));
}

ExtremalConstants lemma1_extremal_constants() {
  const double pi2 = kPi * kPi;
  ExtremalConstants k;
  const double m = agm(1.0, 1.0 / std::numbers::sqrt2);
  k.k1 = pi2 / (m * m);
  const double s3 = std::numbers::sqrt3 / 4;
  k.k2 = pi2 / (std::pow(4.0, 1.0 / 6) * agm(1.0, std::sqrt(0.5 + s3)) * agm(1.0, std::sqrt(0.5 - s3)));
  return k;
}

Lemma1Check lemma1_check(const Invariants& inv) { return lemma1_check(inv, periods(inv)); }

Lemma1Check lemma1_check(const Invariants& inv, const PeriodData& pd) {
  Lemma1Check out;
  out.inv_omega = pd.inv_omega;
  out.rhs = std::pow(to_double(inv.abs_disc), 1.0 / 6) / kLemma1Constant;
  out.ok = out.inv_omega >= out.rhs;
  return out;
}

}  // namespace moddeg
