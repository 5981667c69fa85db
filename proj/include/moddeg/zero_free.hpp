#pragma once

#include "moddeg/certification.hpp"
#include "moddeg/integer.hpp"

#include <array>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace moddeg {

using Rational = boost::multiprecision::cpp_rational;

/// Which zero-free region applies: no CM, CM by an order of Q(i), CM by an
/// order of Q(zeta_3). Other CM fields fall back to the Q(i) constants.
enum class RegionCase { noncm, cm_qi, cm_zeta3 };

std::string to_string(RegionCase c);

enum class ConductorSource { supplied, fallback_N_squared };

std::string to_string(ConductorSource s);

/// N6 data for the Q(zeta_3) case: N6 = N4 = N2^2, except N6 = 9 N4 = N2^2
/// when 3^3 || N.
struct SixthPowerInfo {
  Integer n4;
  Integer n6;
  bool cube_exact_at_3 = false;
};

struct SymPowerConductors {
  Integer n2;
  Integer n4_bound;  // N4 <= N2^2 in general; N4 = N2 for Q(i)
  std::optional<SixthPowerInfo> n6_info;
  ConductorSource source = ConductorSource::supplied;

  /// Fills in the N4/N6 relations for `which`. Throws DomainError when
  /// 3^3 || N is requested but 9 does not divide N2^2.
  static SymPowerConductors make(const Integer& n2, RegionCase which,
                                 ConductorSource source = ConductorSource::supplied,
                                 bool cube_exact_at_3 = false);
};

/// N2 below which none of the region certifications apply.
inline constexpr int kMinSymSquareConductor = 142;

/// Smaller positive root of a2 x^2 + a1 x + a0. A discriminant in
/// [-1e-12, 0) is treated as a double root. Throws DomainError for complex or
/// nonpositive roots.
double eta_smaller_root(double a2, double a1, double a0);

struct RegionConstants {
  RegionCase tag = RegionCase::noncm;
  double delta_max = 0;
  int C = 0;
  double eta_delta_max = 0;  // closed form of eta * delta at delta_max

  /// Coefficients (a2, a1, a0) of the quadratic whose smaller root is eta(delta).
  std::array<double, 3> quadratic(double delta) const;
  /// Discriminant a1^2 - 4 a2 a0 evaluated in extended precision.
  long double discriminant(long double delta) const;
  double eta_at(double delta) const;
  double sigma_max(double n2) const;
  /// delta_max / log(n2 / C): width of the region below s = 1.
  double region_width(double n2) const;
};

RegionConstants region_noncm();
RegionConstants region_cm_qi();
RegionConstants region_cm_zeta3();
RegionConstants region_for(RegionCase c);

/// Each throws PreconditionError when n2 < 142.
CertReport certify_noncm(const SymPowerConductors& n2);
CertReport certify_cm_qi(const SymPowerConductors& n2);
CertReport certify_cm_zeta3(const SymPowerConductors& n2);
CertReport certify_region(RegionCase c, const SymPowerConductors& n2);

/// Coefficients of (1 + cos t)(1 + beta cos t)^2 on {1, cos t, cos 2t, cos 3t}.
std::array<Rational, 4> trig_poly_expand(const Rational& beta);
std::array<double, 4> trig_poly_expand(double beta);

/// Coefficients of (1 + sqrt2 cos t)^2 = 2 + 2 sqrt2 cos t + cos 2t.
std::array<double, 4> trig_poly_qi();

double trig_poly_eval(const std::array<double, 4>& c, double theta);
/// Minimum of the cosine polynomial over `points` equally spaced angles in [0, 2 pi).
double trig_poly_grid_min(const std::array<double, 4>& c, int points);

/// x^5 - 25x^4 - 4x^3 + 30x^2 + 19x + 3
double quintic(double x);

struct QuinticOptimum {
  double root = 0;
  double beta_star = 0;
};

/// Root of the quintic in (1, 2), found by bisection; beta_star = 2 * root.
QuinticOptimum quintic_beta_optimum();

}  // namespace moddeg
