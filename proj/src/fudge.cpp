#include "moddeg/fudge.hpp"

#include "moddeg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace moddeg {

namespace {

bool divides(const Integer& d, const Integer& n) { return n % d == 0; }

FudgeFactor from_epsilon(std::int64_t p, int eps, bool determined) {
  FudgeFactor f;
  f.p = p;
  f.epsilon = eps;
  f.u_inverse_at_1 = 1 - static_cast<double>(eps) / static_cast<double>(p);
  f.determined = determined;
  return f;
}

}  // namespace

std::vector<std::int64_t> primes_with_square_dividing(const Integer& n) {
  if (n < 1) throw DomainError("primes_with_square_dividing: n must be positive");
  std::vector<std::int64_t> out;
  Integer m = n;
  std::int64_t p = 2;
  for (; Integer(p) * p * p <= m; ++p) {
    if (p > 10'000'000) throw DomainError("conductor too large to factor");
    int k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (k >= 2) out.push_back(p);
  }
  // m has no prime factor below p and m < p^3: it is 1, q, q*r or q^2.
  if (m > 1) {
    Integer r = boost::multiprecision::sqrt(m);
    if (r * r == m) {
      if (r > std::numeric_limits<std::int64_t>::max()) throw DomainError("prime too large");
      out.push_back(r.convert_to<std::int64_t>());
    }
  }
  return out;
}

FudgeFactor epsilon_p(const Invariants& inv, std::int64_t p, const Integer& conductor) {
  if (p == 2 || p == 3) throw DomainError("epsilon_p: use u_p_special for p = 2, 3");
  if (!is_prime(p)) throw DomainError("epsilon_p: p must be prime");
  const Integer pz(p);
  if (!divides(pz * pz, conductor)) throw DomainError("epsilon_p: p^2 does not divide N");

  const bool shape = divides(pz * pz, inv.c6) && divides(pz, inv.c4) && !divides(pz * pz, inv.c4);
  FudgeFactor f;
  switch (p % 12) {
    case 1: f = from_epsilon(p, +1, true); break;
    case 11: f = from_epsilon(p, -1, true); break;
    case 5: f = from_epsilon(p, +1, shape); break;
    case 7: f = shape ? from_epsilon(p, -1, true) : from_epsilon(p, +1, false); break;
    default: throw DomainError("epsilon_p: unexpected residue");
  }
  if (p % 12 == 5 && f.determined) {
    f.discriminant_credit = valuation(inv.abs_disc, pz) >= 3 && valuation(conductor, pz) == 2;
  }
  return f;
}

FudgeFactor u_p_special(std::int64_t p, const Invariants& /*inv*/, const Integer& conductor) {
  if (p != 2 && p != 3) throw DomainError("u_p_special: only p = 2 or 3");
  const Integer pz(p);
  if (!divides(pz * pz, conductor)) throw DomainError("u_p_special: p^2 does not divide N");
  if (p == 3) return from_epsilon(3, +1, false);
  if (valuation(conductor, 2) == 8) return from_epsilon(2, +1, false);
  // Outside 2^8 || N only the bound (2-1)(2+1-2)(2+1+2)/2^3 is available.
  FudgeFactor f;
  f.p = 2;
  f.epsilon = +1;
  f.u_inverse_at_1 = 5.0 / 8.0;
  f.determined = false;
  return f;
}

double min_good_twist_factor(std::int64_t p) {
  const auto a = static_cast<std::int64_t>(std::floor(2 * std::sqrt(static_cast<double>(p))));
  std::int64_t amax = a;
  while ((amax + 1) * (amax + 1) <= 4 * p) ++amax;
  while (amax * amax > 4 * p) --amax;
  const double pp = static_cast<double>(p);
  const double ad = static_cast<double>(amax);
  return (pp - 1) * (pp + 1 - ad) * (pp + 1 + ad) / (pp * pp * pp);
}

std::vector<FudgeFactor> fudge_factors(const Invariants& inv, const Integer& conductor, bool twist_minimal) {
  std::vector<FudgeFactor> out;
  for (std::int64_t p : primes_with_square_dividing(conductor)) {
    FudgeFactor f = (p <= 3) ? u_p_special(p, inv, conductor) : epsilon_p(inv, p, conductor);
    if (!twist_minimal) {
      const double floor_value =
          p == 2 ? 0.5 : std::min(1 - 1.0 / static_cast<double>(p), min_good_twist_factor(p));
      if (floor_value < f.u_inverse_at_1) {
        f.u_inverse_at_1 = floor_value;
        f.determined = false;
        f.discriminant_credit = false;
      }
    }
    out.push_back(f);
  }
  return out;
}

double fudge_product(const std::vector<FudgeFactor>& factors) {
  double prod = 1;
  for (const auto& f : factors) prod *= f.u_inverse_at_1;
  return prod;
}

TwistGrowth twist_growth_check(std::int64_t p, std::int64_t a_p, Reduction reduction) {
  if (p < 3 || !is_prime(p)) throw DomainError("twist_growth_check: p must be an odd prime");
  const double pp = static_cast<double>(p);
  TwistGrowth g;
  switch (reduction) {
    case Reduction::additive:
      g.lhs_factor = pp;
      g.rhs_factor = 1;
      break;
    case Reduction::multiplicative:
      g.lhs_factor = pp * pp - 1;
      g.rhs_factor = std::pow(pp, 7.0 / 6.0);
      break;
    case Reduction::good: {
      if (a_p * a_p > 4 * p) throw DomainError("twist_growth_check: a_p violates the Hasse bound");
      const double a = static_cast<double>(a_p);
      g.lhs_factor = (pp - 1) * (pp + 1 - a) * (pp + 1 + a);
      g.rhs_factor = std::pow(pp, 7.0 / 3.0);
      break;
    }
  }
  g.ok = g.lhs_factor >= g.rhs_factor;
  return g;
}

PrimeProductBound prime_product_bound(const Integer& conductor, const std::vector<std::int64_t>& primes) {
  if (conductor < 20000) throw PreconditionError("prime_product_bound: N must be >= 20000");
  const double log_n = static_cast<double>(std::log(to_long_double(conductor)));
  PrimeProductBound b;
  b.actual_log_sum = 0.02;
  for (std::int64_t p : primes) {
    if (!is_prime(p) || p % 3 != 1) throw DomainError("prime_product_bound: primes must be 1 mod 3");
    b.actual_log_sum += 1.0 / static_cast<double>(p);
    if (static_cast<double>(p) > 1.02 * log_n) b.hypothesis_ok = false;
  }
  b.closed_form = 0.5 * std::log(std::log(1.02 * log_n)) - 0.33;
  b.multiplier = std::exp(0.33) / std::sqrt(0.02 + std::log(log_n));
  b.ok = b.actual_log_sum <= b.closed_form;
  return b;
}

std::vector<std::int64_t> squared_primes_1mod3(const Integer& conductor) {
  std::vector<std::int64_t> out;
  for (std::int64_t p : primes_with_square_dividing(conductor)) {
    if (p % 3 == 1) out.push_back(p);
  }
  return out;
}

}  // namespace moddeg
