#pragma once

#include "moddeg/certification.hpp"
#include "moddeg/curve.hpp"
#include "moddeg/integer.hpp"

#include <cstdint>

namespace moddeg {

/// Constant in L(Sym^2 E, 1) >= 0.033 / log N2.
inline constexpr double kSymSquareConstant = 0.033;
/// Error-term constant: |E(X)| <= 20 sqrt(N2) X^{1/2 - b}.
inline constexpr double kErrorConstant = 20;

/// 0.033 / log(n2); throws PreconditionError for n2 < 142.
double symsq_lower_bound(const Integer& n2);
double symsq_lower_bound(double n2);

struct LineBounds {
  double symsq_halfline = 0;  // zeta(3/2)^3 sqrt(N2 / 8 pi^3) |5/2 + it|^{3/2}
  double zeta_halfline = 0;   // zeta(3/2) / sqrt(2 pi) * sqrt(9/4 + t^2)
};

/// Convexity bounds for |L(Sym^2, 1/2 + it)| and |zeta(1/2 + it)|.
LineBounds rademacher_line_bounds(double t, double n2);

struct Lemma4Cert {
  Integer n2;
  double b = 0;            // 1 - 1/(25 log N2)
  double log_x = 0;        // log X with X = (4e6 N2)^{50/49}
  double x_power = 0;      // X^{1-b}
  double gamma_1mb = 0;    // Gamma(1 - b), computed
  double gamma_bound = 0;  // 25 log N2
  double error_integral = 0;
  double error_integral_abs_error = 0;
  double e_const = kErrorConstant;
  double lower_bound = 0;  // 0.033 / log N2
  CertReport report;
};

Lemma4Cert lemma4_certify(const Integer& n2);

/// Truncated Euler product for L(Sym^2 E, 1) over good primes p <= cutoff.
/// Not rigorous; used only as a sanity cross-check.
double symsq_value_estimate(const CurveModel& curve, std::int64_t prime_cutoff);

}  // namespace moddeg
