#pragma once

#include <functional>

namespace moddeg {

inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Gamma'/Gamma for x > 0: upward recurrence to x >= 10, then the asymptotic
/// series through B14.
double digamma(double x);

/// Riemann zeta for real s > 1 by Euler-Maclaurin summation.
double zeta_real(double s);

/// |Gamma(1/2 + it)| = sqrt(pi sech(pi t)).
double abs_gamma_half_line(double t);

struct IntegrationResult {
  double value = 0;
  double abs_error = 0;
  int intervals = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on a finite interval.
/// Throws NumericError if the tolerance is not met within max_intervals.
IntegrationResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                     double abs_tol, int max_intervals = 2000);

struct QuadratureResult {
  double value = 0;
  double abs_error_estimate = 0;  // quadrature error + analytic tail bound
  double truncation_point = 40;
  double tail_bound = 0;
};

/// Which form of the first factor the error integrand uses.
///   line_bound: |5/2 + it|^{3/2} = (25/4 + t^2)^{3/4}, the product of the two
///               half-line bounds (this is what bounds E(X)).
///   printed:    (25/4 + t^2)^{3/2}, the exponent as typeset in the source.
enum class ErrorIntegrand { line_bound, printed };

/// zeta(3/2)^4 / (4 pi^2) * (25/4+t^2)^{e} sqrt(9/4+t^2) * 2(1+t^2)^{1/200} / sqrt(1+4t^2)
///   * sqrt(pi sech(pi t)),  e = 3/4 (line_bound) or 3/2 (printed).
double lemma4_integrand(double t, ErrorIntegrand form = ErrorIntegrand::line_bound);

/// Integral of lemma4_integrand over [0, inf): adaptive quadrature on [0, 40]
/// plus an analytic bound on the tail.
QuadratureResult lemma4_error_integral(ErrorIntegrand form = ErrorIntegrand::line_bound,
                                       double abs_tol = 1e-9);

}  // namespace moddeg
