#include "moddeg/curve.hpp"

#include "moddeg/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

namespace moddeg {

Integer parse_integer(const std::string& text) {
  std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') throw std::invalid_argument("not an integer: '" + text + "'");
  }
  Integer v(text.substr(i));
  return text[0] == '-' ? Integer(-v) : v;
}

void CurveModel::validate() const {
  if (conductor < 1) throw DomainError("conductor must be >= 1");
  if (known_degree && *known_degree < 1) throw DomainError("known degree must be >= 1");
  if (n2 && *n2 < 1) throw DomainError("symmetric-square conductor must be >= 1");
}

Invariants derive_invariants(const CurveModel& curve) {
  const auto& [a1, a2, a3, a4, a6] = curve.a;
  Invariants inv;
  inv.b2 = a1 * a1 + 4 * a2;
  inv.b4 = 2 * a4 + a1 * a3;
  inv.b6 = a3 * a3 + 4 * a6;
  inv.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  inv.c4 = inv.b2 * inv.b2 - 24 * inv.b4;
  inv.c6 = -inv.b2 * inv.b2 * inv.b2 + 36 * inv.b2 * inv.b4 - 216 * inv.b6;
  inv.disc = -inv.b2 * inv.b2 * inv.b8 - 8 * inv.b4 * inv.b4 * inv.b4 - 27 * inv.b6 * inv.b6 +
             9 * inv.b2 * inv.b4 * inv.b6;
  if (inv.disc == 0) throw SingularCurveError();
  inv.abs_disc = abs(inv.disc);
  inv.disc_positive = inv.disc > 0;

  Integer num = inv.c4 * inv.c4 * inv.c4;
  Integer den = inv.disc;
  Integer g = gcd(num, den);
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  inv.j_num = num;
  inv.j_den = den;
  return inv;
}

namespace {

using Real = long double;

// x^3 + p x + q
Real depressed(Real x, Real p, Real q) { return (x * x + p) * x + q; }

Real newton_polish(Real x, Real p, Real q) {
  for (int it = 0; it < 3; ++it) {
    Real d = 3 * x * x + p;
    if (d == 0) break;
    Real step = depressed(x, p, q) / d;
    if (!std::isfinite(step)) break;
    x -= step;
  }
  return x;
}

}  // namespace

RootData two_torsion_roots(const Invariants& inv) {
  // 4x^3 + b2 x^2 + 2 b4 x + b6 = 4 (X^3 + p X + q),  X = x + b2/12.
  const Real c4 = to_long_double(inv.c4);
  const Real c6 = to_long_double(inv.c6);
  const Real p = -c4 / 48;
  const Real q = -c6 / 864;
  const Real shift = to_long_double(inv.b2) / 12;

  RootData out;
  if (inv.disc_positive) {
    // Three real roots; c4 > 0 is forced by Delta > 0.
    const Real m = std::sqrt(c4) / 6;
    Real arg = c6 / (c4 * std::sqrt(c4));
    arg = std::clamp(arg, Real(-1), Real(1));
    const Real theta = std::acos(arg) / 3;
    const Real two_pi_3 = 2 * std::numbers::pi_v<Real> / 3;
    std::array<Real, 3> xs = {m * std::cos(theta), m * std::cos(theta - two_pi_3),
                              m * std::cos(theta + two_pi_3)};
    for (auto& x : xs) x = newton_polish(x, p, q);
    std::sort(xs.begin(), xs.end(), std::greater<>());
    out.kind = RootKind::three_real;
    out.e1 = static_cast<double>(xs[0] - shift);
    out.e2 = static_cast<double>(xs[1] - shift);
    out.e3 = static_cast<double>(xs[2] - shift);
  } else {
    const Real h = q * q / 4 + p * p * p / 27;  // > 0 for one real root
    const Real s = std::sqrt(std::max(h, Real(0)));
    const Real u = std::cbrt(-q / 2 - (q >= 0 ? s : -s));
    Real x = (u == 0) ? Real(0) : u - p / (3 * u);
    x = newton_polish(x, p, q);
    out.kind = RootKind::one_real;
    out.r_tilde = static_cast<double>(x);
    out.r = static_cast<double>(x - shift);
    // Vieta on the depressed cubic: the pair is -X/2 +- iZ with Z^2 = 3X^2/4 + p.
    out.z = static_cast<double>(std::sqrt(std::max(Real(0.75) * x * x + p, Real(0))));
  }
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t trace_of_frobenius(const CurveModel& curve, std::int64_t p) {
  return trace_of_frobenius(curve, derive_invariants(curve), p);
}

std::int64_t trace_of_frobenius(const CurveModel& curve, const Invariants& inv, std::int64_t p) {
  if (!is_prime(p)) throw DomainError("trace_of_frobenius: p = " + std::to_string(p) + " is not prime");
  if (p > kPointCountCutoff) {
    throw DomainError("trace_of_frobenius: p = " + std::to_string(p) + " exceeds the point-counting cutoff");
  }
  if (mod_small(inv.disc, p) == 0) {
    throw BadReductionError("trace_of_frobenius: bad reduction at p = " + std::to_string(p));
  }

  std::int64_t points = 1;  // point at infinity
  if (p == 2) {
    std::array<std::int64_t, 5> a{};
    for (std::size_t i = 0; i < 5; ++i) a[i] = mod_small(curve.a[i], 2);
    for (std::int64_t x = 0; x < 2; ++x) {
      for (std::int64_t y = 0; y < 2; ++y) {
        std::int64_t lhs = y * y + a[0] * x * y + a[2] * y;
        std::int64_t rhs = x * x * x + a[1] * x * x + a[3] * x + a[4];
        if ((lhs - rhs) % 2 == 0) ++points;
      }
    }
  } else {
    // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    std::vector<char> square(static_cast<std::size_t>(p), 0);
    for (std::int64_t y = 1; y < p; ++y) square[static_cast<std::size_t>(y * y % p)] = 1;
    const std::int64_t b2 = mod_small(inv.b2, p);
    const std::int64_t b4 = mod_small(2 * inv.b4, p);
    const std::int64_t b6 = mod_small(inv.b6, p);
    std::int64_t chi_sum = 0;
    for (std::int64_t x = 0; x < p; ++x) {
      std::int64_t f = ((4 * x % p + b2) % p * x % p + b4) % p * x % p;
      f = (f + b6) % p;
      if (f != 0) chi_sum += square[static_cast<std::size_t>(f)] ? 1 : -1;
    }
    points += p + chi_sum;
  }
  const std::int64_t ap = p + 1 - points;
  if (ap * ap > 4 * p) throw NumericError("trace_of_frobenius: Hasse bound violated");
  return ap;
}

int cm_field_discriminant(const Invariants& inv) {
  if (inv.j_den != 1) return 0;
  // Rational CM j-invariants with the discriminant of their CM field.
  static const std::vector<std::pair<Integer, int>> table = {
      {Integer(0), -3},
      {Integer(54000), -3},
      {Integer(-12288000), -3},
      {Integer(1728), -4},
      {Integer(287496), -4},
      {Integer(-3375), -7},
      {Integer(16581375), -7},
      {Integer(8000), -8},
      {Integer(-32768), -11},
      {Integer(-884736), -19},
      {Integer(-884736000), -43},
      {Integer("-147197952000"), -67},
      {Integer("-262537412640768000"), -163},
  };
  for (const auto& [j, d] : table) {
    if (inv.j_num == j) return d;
  }
  return 0;
}

}  // namespace moddeg
