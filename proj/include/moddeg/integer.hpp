#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace moddeg {

/// Exact integer used for Weierstrass coefficients and derived invariants.
using Integer = boost::multiprecision::cpp_int;

inline double to_double(const Integer& n) { return n.convert_to<double>(); }
inline long double to_long_double(const Integer& n) { return n.convert_to<long double>(); }

/// Non-negative residue of n modulo m (m > 0).
inline std::int64_t mod_small(const Integer& n, std::int64_t m) {
  Integer r = n % m;
  if (r < 0) r += m;
  return r.convert_to<std::int64_t>();
}

/// Largest k with p^k | n; n must be nonzero.
inline int valuation(Integer n, const Integer& p) {
  int k = 0;
  if (n == 0) return k;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

Integer parse_integer(const std::string& text);

}  // namespace moddeg
