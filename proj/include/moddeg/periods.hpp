#pragma once

#include "moddeg/curve.hpp"

namespace moddeg {

/// agm(x, y) for x, y > 0. Stops when |a - b| <= 1e-15 a or after 64 steps.
double agm(double x, double y);

enum class PeriodCase { pos_disc, neg_disc };

/// Fundamental-parallelogram data of y^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
/// omega is the real period times the imaginary part of the imaginary period.
struct PeriodData {
  double omega = 0;
  double real_period = 0;
  double imag_part = 0;
  double inv_omega = 0;
  PeriodCase case_tag = PeriodCase::pos_disc;
  double t_or_c = 0;  // t = (e1-e2)/(e1-e3) for pos_disc, c = r_tilde/Z for neg_disc
};

/// Requires e1 > e2 > e3; throws DomainError otherwise.
PeriodData area_pos_disc(double e1, double e2, double e3);

/// Requires 2B > |A| with A = 3r + b2/4, B = sqrt(3r^2 + b2 r/2 + b4/2).
PeriodData area_neg_disc(double r, const Integer& b2, const Integer& b4);

PeriodData periods(const Invariants& inv, const RootData& roots);
inline PeriodData periods(const Invariants& inv) { return periods(inv, two_torsion_roots(inv)); }

/// Shape factors with 1/Omega = D^{1/6} * shape / pi^2.
///   pos_disc: agm(1, sqrt t) agm(1, sqrt(1-t)) / (4t(1-t))^{1/3}
///   neg_disc: (1 + 9c^2/4)^{1/6} M(sqrt(1/2 + 3c/sqrt(16+36c^2))) M(sqrt(1/2 - ...))
double shape_factor_pos(double t);
double shape_factor_neg(double c);

struct ExtremalConstants {
  double k1 = 0;  // pi^2 / shape_factor_pos(1/2)
  double k2 = 0;  // pi^2 / shape_factor_neg(sqrt(4/3))
};

inline constexpr double kLemma1Constant = 14.045;

ExtremalConstants lemma1_extremal_constants();

struct Lemma1Check {
  double inv_omega = 0;
  double rhs = 0;  // D^{1/6} / 14.045
  bool ok = false;
  double margin() const { return inv_omega - rhs; }
};

Lemma1Check lemma1_check(const Invariants& inv);
Lemma1Check lemma1_check(const Invariants& inv, const PeriodData& pd);

}  // namespace moddeg
