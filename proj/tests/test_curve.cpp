#include "moddeg/curve.hpp"
#include "moddeg/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace moddeg;

TEST_CASE("invariants of 37a1") {
  const auto inv = derive_invariants(oracle::curve({0, 0, 1, -1, 0}));
  CHECK(inv.b2 == 0);
  CHECK(inv.b4 == -2);
  CHECK(inv.b6 == 1);
  CHECK(inv.b8 == -1);
  CHECK(inv.c4 == 48);
  CHECK(inv.c6 == -216);
  CHECK(inv.disc == 37);
  CHECK(inv.abs_disc == 37);
  CHECK(inv.disc_positive);
  CHECK(inv.j_num == 110592);
  CHECK(inv.j_den == 37);
}

TEST_CASE("x^3 - x + 1 has negative discriminant") {
  const auto inv = derive_invariants(oracle::curve({0, 0, 0, -1, 1}));
  CHECK(inv.disc == -368);
  CHECK_FALSE(inv.disc_positive);
  const auto roots = two_torsion_roots(inv);
  REQUIRE(roots.kind == RootKind::one_real);
  CHECK(roots.r == doctest::Approx(-1.324717957244746).epsilon(1e-13));
  // complex pair of x^3 - x + 1: 0.662358978622373 +- 0.562279512062301 i
  CHECK(roots.z == doctest::Approx(0.562279512062301).epsilon(1e-12));
  CHECK(roots.r_tilde == doctest::Approx(roots.r).epsilon(1e-15));
}

TEST_CASE("singular models are rejected") {
  CHECK_THROWS_AS(derive_invariants(oracle::curve({0, 0, 0, 0, 0})), SingularCurveError);
  CHECK_THROWS_AS(derive_invariants(oracle::curve({0, 1, 0, 0, 0})), SingularCurveError);  // node
  CHECK_THROWS_WITH(derive_invariants(oracle::curve({0, 0, 0, 0, 0})), "singular curve");
}

TEST_CASE("identities 1728 Delta = c4^3 - c6^2 and 4 b8 = b2 b6 - b4^2 on random curves") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const auto c = oracle::random_curve(rng, 100000);
    const auto inv = derive_invariants(c);
    REQUIRE(1728 * inv.disc == inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6);
    REQUIRE(4 * inv.b8 == inv.b2 * inv.b6 - inv.b4 * inv.b4);
    REQUIRE(inv.j_num * inv.disc == inv.c4 * inv.c4 * inv.c4 * inv.j_den);
  }
}

TEST_CASE("two-torsion roots satisfy the cubic") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto inv = derive_invariants(oracle::random_curve(rng));
    const auto roots = two_torsion_roots(inv);
    const auto f = oracle::cubic_of(inv);
    const auto reference = oracle::real_roots(f);
    if (roots.kind == RootKind::three_real) {
      REQUIRE(inv.disc_positive);
      REQUIRE(reference.size() == 3);
      CHECK(roots.e1 > roots.e2);
      CHECK(roots.e2 > roots.e3);
      CHECK(roots.e1 == doctest::Approx(static_cast<double>(reference[0])).epsilon(1e-9));
      CHECK(roots.e3 == doctest::Approx(static_cast<double>(reference[2])).epsilon(1e-9));
    } else {
      REQUIRE_FALSE(inv.disc_positive);
      REQUIRE(reference.size() == 1);
      CHECK(roots.r == doctest::Approx(static_cast<double>(reference[0])).epsilon(1e-9));
      CHECK(roots.z > 0);
    }
  }
}

TEST_CASE("traces of Frobenius for 37a1") {
  const auto c = oracle::curve({0, 0, 1, -1, 0}, 37);
  CHECK(trace_of_frobenius(c, 2) == -2);
  CHECK(trace_of_frobenius(c, 3) == -3);
  CHECK(trace_of_frobenius(c, 5) == -2);
  CHECK(trace_of_frobenius(c, 7) == -1);
  CHECK(trace_of_frobenius(c, 11) == -5);
  CHECK(trace_of_frobenius(c, 13) == -2);
  CHECK_THROWS_AS(trace_of_frobenius(c, 37), BadReductionError);
  CHECK_THROWS_AS(trace_of_frobenius(c, 4), DomainError);
  CHECK_THROWS_AS(trace_of_frobenius(c, 1'000'003), DomainError);
}

TEST_CASE("trace agrees with brute-force enumeration") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto c = oracle::random_curve(rng, 50);
    const auto inv = derive_invariants(c);
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 97, 101}) {
      if (mod_small(inv.disc, p) == 0) continue;
      REQUIRE(trace_of_frobenius(c, inv, p) == oracle::brute_force_trace(c, p));
    }
  }
}

TEST_CASE("Hasse bound for good primes up to 1000") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const auto c = oracle::random_curve(rng);
    const auto inv = derive_invariants(c);
    for (std::int64_t p = 2; p <= 1000; ++p) {
      if (!is_prime(p) || mod_small(inv.disc, p) == 0) continue;
      const auto a = trace_of_frobenius(c, inv, p);
      REQUIRE(static_cast<double>(a * a) <= 4.0 * static_cast<double>(p));
    }
  }
}

TEST_CASE("CM detection by j-invariant") {
  CHECK(cm_field_discriminant(derive_invariants(oracle::curve({0, 0, 1, 0, -7}))) == -3);   // 27a1, j = 0
  CHECK(cm_field_discriminant(derive_invariants(oracle::curve({0, 0, 0, 4, 0}))) == -4);    // 32a1, j = 1728
  CHECK(cm_field_discriminant(derive_invariants(oracle::curve({1, -1, 0, -2, -1}))) == -7); // 49a1
  CHECK(cm_field_discriminant(derive_invariants(oracle::curve({0, 0, 0, 0, 1}))) == -3);    // 36a1
  CHECK_FALSE(is_cm(derive_invariants(oracle::curve({0, 0, 1, -1, 0}))));
}

TEST_CASE("curve validation and integer parsing") {
  auto c = oracle::curve({0, 0, 1, -1, 0}, 0);
  CHECK_THROWS_AS(c.validate(), DomainError);
  c.conductor = 37;
  c.known_degree = Integer(0);
  CHECK_THROWS_AS(c.validate(), DomainError);
  CHECK(parse_integer("-123456789012345678901234567890") == Integer("-123456789012345678901234567890"));
  CHECK_THROWS(parse_integer("12x"));
  CHECK_THROWS(parse_integer(""));
}

TEST_CASE("root identities") {
  Invariants inv;
  inv.b2 = 0;
  inv.b4 = -2;
  inv.b6 = 0;
  inv.c4 = 48;  // b2^2 - 24 b4
  inv.c6 = 0;   // -b2^3 + 36 b2 b4 - 216 b6
  inv.disc = 64;
  inv.abs_disc = 64;
  inv.disc_positive = true;
  const auto a = two_torsion_roots(inv);
  CHECK(a.e1 == doctest::Approx(1).epsilon(1e-15));
  CHECK(std::fabs(a.e2) < 1e-15);
  CHECK(a.e3 == doctest::Approx(-1).epsilon(1e-15));

  const auto b = two_torsion_roots(derive_invariants(oracle::curve({0, 0, 1, -1, 0})));
  CHECK((b.e1 - b.e2) * (b.e1 - b.e3) * (b.e2 - b.e3) == doctest::Approx(std::sqrt(37.0 / 16)).epsilon(1e-10));

  // one real root: 2 Z B^2 = sqrt(-Delta / 16) with B^2 = (3 r_tilde / 2)^2 + Z^2
  std::mt19937_64 rng(13);
  int seen = 0;
  while (seen < 200) {
    const auto inv2 = derive_invariants(oracle::random_curve(rng));
    if (inv2.disc_positive) continue;
    ++seen;
    const auto r = two_torsion_roots(inv2);
    const double b2 = std::pow(1.5 * r.r_tilde, 2) + r.z * r.z;
    REQUIRE(2 * r.z * b2 == doctest::Approx(std::sqrt(-to_double(inv2.disc) / 16)).epsilon(1e-10));
  }
}

TEST_CASE("three-real roots are zeros of the cubic") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    const auto inv = derive_invariants(oracle::random_curve(rng));
    const auto r = two_torsion_roots(inv);
    if (r.kind != RootKind::three_real) continue;
    const auto f = oracle::cubic_of(inv);
    const double scale = std::max(1.0, std::fabs(to_double(inv.b6)));
    for (double e : {r.e1, r.e2, r.e3}) REQUIRE(std::fabs(static_cast<double>(f(e))) < 1e-8 * scale);
  }
}
