#pragma once

#include "moddeg/curve.hpp"
#include "moddeg/fudge.hpp"
#include "moddeg/periods.hpp"
#include "moddeg/zero_free.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace moddeg {

/// Conductor below which explicit tables should be used instead.
inline constexpr int kTableThreshold = 20000;
inline constexpr const char* kThresholdWarning = "below paper threshold; consult tables";

/// (N / (2 pi Omega)) * l_value_lower * prod(fudge_inverses), with the Manin
/// constant taken as 1. Throws DomainError on nonpositive input.
double degree_formula_bound(const Integer& conductor, double omega, double l_value_lower,
                            const std::vector<double>& fudge_inverses);

struct Theorem1Bounds {
  double analytic = 0;     // (N / (2 pi Omega)) * 0.033 / (2 log N)
  double closed_form = 0;  // N^{7/6} / (5350 log N)
  bool below_threshold = false;
};

Theorem1Bounds theorem1(const Integer& conductor, double omega);

struct Theorem2Bounds {
  double analytic = 0;      // (N / (2 pi Omega)) * 0.033 / log N2 * prod U_p(1)^{-1}
  double intermediate = 0;  // N^{7/6} / (7150 log N2) * prod_{p^2|N, p=1(3)} (1 - 1/p)
  double closed_form = 0;   // N^{7/6} / log N * (1/10300) / sqrt(0.02 + log log N)
  bool below_threshold = false;
};

Theorem2Bounds theorem2(const Integer& conductor, const Integer& n2, double omega,
                        const std::vector<double>& fudge_inverses,
                        const std::vector<std::int64_t>& squared_primes_1mod3);

/// The final closed form of theorem2 as a function of log N alone.
double theorem2_closed_form_log(double log_n);

struct LinearBounds {
  double abramovich = 0;           // 7N/1600
  double abramovich_selberg = 0;   // N/192, conditional on Selberg's eigenvalue conjecture
  double ogg_estimate = 0;         // pN / (12 (p+1)^2), heuristic
  std::int64_t ogg_prime = 0;
};

/// With no prime given, the smallest prime not dividing N is used.
LinearBounds linear_bounds(const Integer& conductor, std::optional<std::int64_t> good_prime = std::nullopt);

struct Crossover {
  double log_n_star = 0;
  bool ok = false;  // log N* in [86.0, 87.5]
};

/// Smallest N* with theorem2 closed form >= N, located by bisection in log N.
Crossover crossover_check();

/// p^{1/6} (1 - 1/p): the local factor once the extra p^{1/6} from p^3 | D is
/// credited at a prime p = 5 mod 12 with epsilon_p = +1.
double credited_local_factor(std::int64_t p);

enum class CmMode { automatic, cm, noncm };

struct BoundOptions {
  std::optional<Integer> n2_override;
  CmMode cm_mode = CmMode::automatic;
  bool twist_minimal = true;
  std::optional<bool> semistable;
  std::int64_t estimator_cutoff = 5000;
};

struct DegreeBoundReport {
  std::string label;
  Integer conductor;
  Integer n2_used;
  ConductorSource n2_source = ConductorSource::fallback_N_squared;
  Integer disc;
  PeriodData period;
  Lemma1Check lemma1;
  int cm_discriminant = 0;
  RegionCase region = RegionCase::noncm;
  std::optional<double> region_width;     // delta / log(N2 / C)
  std::optional<bool> region_certified;   // certification at N2 passes
  std::vector<FudgeFactor> fudge;
  double fudge_product = 1;
  std::vector<std::int64_t> credit_primes;
  std::optional<double> l_value_lower;
  std::optional<double> formula_bound;
  std::optional<Theorem1Bounds> theorem1_bounds;  // semistable only
  std::optional<Theorem2Bounds> theorem2_bounds;
  LinearBounds linear;
  std::optional<PrimeProductBound> prime_product;
  bool semistable = false;
  bool semistable_flag_matches = true;
  std::optional<bool> chain_analytic_intermediate;
  std::optional<bool> chain_intermediate_closed;  // only for N >= 20000
  std::optional<bool> theorem1_chain;             // analytic >= closed form when D >= N
  std::optional<Integer> known_degree;
  std::optional<bool> consistency_ok;
  // non-rigorous cross-checks
  double symsq_estimate = 0;
  double degree_estimate = 0;
  std::optional<std::string> warning;  // set below the conductor threshold
  std::vector<std::string> notes;

  /// Every certified lower bound that was computed.
  std::vector<std::pair<std::string, double>> certified_bounds() const;
};

DegreeBoundReport assemble_bounds(const CurveModel& curve, const BoundOptions& options);

}  // namespace moddeg
