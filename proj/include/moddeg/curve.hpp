#pragma once

#include "moddeg/integer.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace moddeg {

/// Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 together
/// with externally supplied arithmetic data. The conductor is never computed
/// here; it is an input.
struct CurveModel {
  std::array<Integer, 5> a{};  // a1, a2, a3, a4, a6
  Integer conductor{1};
  std::string label;
  std::optional<Integer> known_degree;
  std::optional<Integer> n2;  // symmetric-square conductor, when known

  const Integer& a1() const { return a[0]; }
  const Integer& a2() const { return a[1]; }
  const Integer& a3() const { return a[2]; }
  const Integer& a4() const { return a[3]; }
  const Integer& a6() const { return a[4]; }

  /// Throws DomainError unless conductor >= 1 and known_degree >= 1.
  void validate() const;
};

struct Invariants {
  Integer b2, b4, b6, b8;
  Integer c4, c6;
  Integer disc;      // Delta, nonzero
  Integer abs_disc;  // D = |Delta|
  bool disc_positive = false;
  Integer j_num, j_den;  // j = c4^3 / Delta in lowest terms, j_den > 0
};

enum class RootKind { three_real, one_real };

/// Real roots of the 2-torsion polynomial 4x^3 + b2 x^2 + 2 b4 x + b6.
struct RootData {
  RootKind kind = RootKind::three_real;
  // three_real: e1 > e2 > e3
  double e1 = 0, e2 = 0, e3 = 0;
  // one_real: real root r, complex pair -r_tilde/2 - b2/12 +- iZ
  double r = 0, z = 0, r_tilde = 0;
};

/// Standard b- and c-invariants; throws SingularCurveError when Delta = 0.
Invariants derive_invariants(const CurveModel& curve);

/// Roots of 4x^3 + b2 x^2 + 2 b4 x + b6 via the depressed cubic
/// 4X^3 - (c4/12) X - c6/216 (X = x + b2/12), polished by Newton steps.
RootData two_torsion_roots(const Invariants& inv);

/// Largest prime accepted by trace_of_frobenius (naive O(p) enumeration).
inline constexpr std::int64_t kPointCountCutoff = 1'000'000;

bool is_prime(std::int64_t n);

/// a_p = p + 1 - #E(F_p) by point enumeration. Throws BadReductionError when
/// p | Delta and DomainError when p is not prime or exceeds the cutoff.
std::int64_t trace_of_frobenius(const CurveModel& curve, std::int64_t p);
std::int64_t trace_of_frobenius(const CurveModel& curve, const Invariants& inv, std::int64_t p);

/// Imaginary quadratic field discriminant of the CM field, or 0 when j is not
/// one of the thirteen rational CM j-invariants.
int cm_field_discriminant(const Invariants& inv);

inline bool is_cm(const Invariants& inv) { return cm_field_discriminant(inv) != 0; }

}  // namespace moddeg
