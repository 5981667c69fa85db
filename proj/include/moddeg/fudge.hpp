#pragma once

#include "moddeg/curve.hpp"
#include "moddeg/integer.hpp"

#include <cstdint>
#include <vector>

namespace moddeg {

/// Local factor U_p(1)^{-1} = 1 - epsilon/p at a prime with p^2 | N.
struct FudgeFactor {
  std::int64_t p = 0;
  int epsilon = 1;  // -1, 0, +1
  double u_inverse_at_1 = 0;
  bool determined = true;  // false when the congruence rules leave epsilon open
  // p = 5 mod 12 with p^3 | D and p^2 || N: the D^{1/6} term gains p^{1/6},
  // so N_p D_p^{1/6} U_p(1)^{-1} >= N_p^{7/6}.
  bool discriminant_credit = false;
};

/// epsilon_p for p >= 5, p^2 | N, twist-minimal at p. Undecided cases fall
/// back to epsilon = +1 with determined = false. Throws DomainError for p in
/// {2, 3} or p^2 not dividing N.
FudgeFactor epsilon_p(const Invariants& inv, std::int64_t p, const Integer& conductor);

/// U_2 and U_3: 2/3 for p = 3; for p = 2, 1/2 when 2^8 || N and 5/8 otherwise.
FudgeFactor u_p_special(std::int64_t p, const Invariants& inv, const Integer& conductor);

/// Smallest (p-1)(p+1-a)(p+1+a)/p^3 over Hasse-admissible integers a; the
/// local factor of a good-reduction twist.
double min_good_twist_factor(std::int64_t p);

/// Factors for every prime with p^2 | N. Primes not declared twist-minimal use
/// the conservative good-twist minimum.
std::vector<FudgeFactor> fudge_factors(const Invariants& inv, const Integer& conductor,
                                       bool twist_minimal = true);

/// Product of u_inverse_at_1.
double fudge_product(const std::vector<FudgeFactor>& factors);

enum class Reduction { additive, multiplicative, good };

struct TwistGrowth {
  double lhs_factor = 0;  // growth of deg phi under twisting by p
  double rhs_factor = 0;  // growth of N^{7/6} * (D-dependent) right side
  bool ok = false;
};

/// Throws DomainError when p < 3 or a_p violates the Hasse bound.
TwistGrowth twist_growth_check(std::int64_t p, std::int64_t a_p, Reduction reduction);

struct PrimeProductBound {
  double actual_log_sum = 0;  // sum 1/p + 0.02
  double closed_form = 0;     // 0.5 log log(1.02 log N) - 0.33
  double multiplier = 0;      // e^{0.33} / sqrt(0.02 + log log N)
  bool hypothesis_ok = true;  // every p <= 1.02 log N
  bool ok = false;            // actual_log_sum <= closed_form
};

/// Throws PreconditionError when N < 20000.
PrimeProductBound prime_product_bound(const Integer& conductor, const std::vector<std::int64_t>& primes);

/// Primes p = 1 mod 3 with p^2 | N.
std::vector<std::int64_t> squared_primes_1mod3(const Integer& conductor);

/// Primes p with p^2 | n, by trial division (n must be positive).
std::vector<std::int64_t> primes_with_square_dividing(const Integer& n);

}  // namespace moddeg
