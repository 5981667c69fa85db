#include "moddeg/bounds.hpp"

#include "moddeg/errors.hpp"
#include "moddeg/lvalue.hpp"

#include <cmath>
#include <numbers>

namespace moddeg {
namespace {

constexpr double kPi = std::numbers::pi;

double log_of(const Integer& n) { return static_cast<double>(std::log(to_long_double(n))); }

}  // namespace

double degree_formula_bound(const Integer& conductor, double omega, double l_value_lower,
                            const std::vector<double>& fudge_inverses) {
  if (conductor <= 0 || !(omega > 0) || !(l_value_lower > 0)) {
    throw DomainError("degree_formula_bound: inputs must be positive");
  }
  double product = 1;
  for (double u : fudge_inverses) {
    if (!(u > 0)) throw DomainError("degree_formula_bound: fudge factors must be positive");
    product *= u;
  }
  return to_double(conductor) / (2 * kPi * omega) * l_value_lower * product;
}

Theorem1Bounds theorem1(const Integer& conductor, double omega) {
  if (conductor < 2 || !(omega > 0)) throw DomainError("theorem1: need N >= 2 and omega > 0");
  const double n = to_double(conductor);
  const double log_n = log_of(conductor);
  Theorem1Bounds out;
  out.analytic = n / (2 * kPi * omega) * kSymSquareConstant / (2 * log_n);
  out.closed_form = std::exp(7.0 / 6.0 * log_n) / (5350 * log_n);
  out.below_threshold = conductor < kTableThreshold;
  return out;
}

double theorem2_closed_form_log(double log_n) {
  return std::exp(7.0 / 6.0 * log_n) / log_n / 10300 / std::sqrt(0.02 + std::log(log_n));
}

Theorem2Bounds theorem2(const Integer& conductor, const Integer& n2, double omega,
                        const std::vector<double>& fudge_inverses,
                        const std::vector<std::int64_t>& squared_primes_1mod3) {
  if (conductor < 2 || !(omega > 0) || n2 < 2) {
    throw DomainError("theorem2: need N >= 2, N2 >= 2 and omega > 0");
  }
  const double log_n = log_of(conductor);
  const double log_n2 = log_of(n2);
  Theorem2Bounds out;
  out.analytic = degree_formula_bound(conductor, omega, kSymSquareConstant / log_n2, fudge_inverses);
  double euler = 1;
  for (auto p : squared_primes_1mod3) euler *= 1 - 1.0 / static_cast<double>(p);
  out.intermediate = std::exp(7.0 / 6.0 * log_n) / (7150 * log_n2) * euler;
  out.closed_form = theorem2_closed_form_log(log_n);
  out.below_threshold = conductor < kTableThreshold;
  return out;
}

LinearBounds linear_bounds(const Integer& conductor, std::optional<std::int64_t> good_prime) {
  if (conductor < 1) throw DomainError("linear_bounds: N must be positive");
  std::int64_t p = 0;
  if (good_prime) {
    // The estimate is heuristic, so a supplied prime is used as given.
    p = *good_prime;
    if (p < 2) throw DomainError("linear_bounds: p must be at least 2");
  } else {
    for (p = 2; mod_small(conductor, p) == 0 || !is_prime(p); ++p) {
    }
  }
  const double n = to_double(conductor);
  const double pd = static_cast<double>(p);
  LinearBounds out;
  out.abramovich = 7 * n / 1600;
  out.abramovich_selberg = n / 192;
  out.ogg_estimate = pd * n / (12 * (pd + 1) * (pd + 1));
  out.ogg_prime = p;
  return out;
}

Crossover crossover_check() {
  // log(closed_form / N) = L/6 - log L - log 10300 - log(0.02 + log L)/2 is
  // increasing for L > 6, so a sign change on [10, 200] is unique.
  auto excess = [](double log_n) {
    return log_n / 6 - std::log(log_n) - std::log(10300.0) - 0.5 * std::log(0.02 + std::log(log_n));
  };
  double lo = 10, hi = 200;
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) >= 0 ? hi : lo) = mid;
  }
  Crossover out;
  out.log_n_star = hi;
  out.ok = hi >= 86.0 && hi <= 87.5;
  return out;
}

double credited_local_factor(std::int64_t p) {
  const double pd = static_cast<double>(p);
  return std::pow(pd, 1.0 / 6) * (1 - 1 / pd);
}

std::vector<std::pair<std::string, double>> DegreeBoundReport::certified_bounds() const {
  std::vector<std::pair<std::string, double>> out;
  if (formula_bound) out.emplace_back("formula_bound", *formula_bound);
  const bool above = conductor >= kTableThreshold;
  if (theorem1_bounds) {
    out.emplace_back("theorem1.analytic", theorem1_bounds->analytic);
    if (above) out.emplace_back("theorem1.closed_form", theorem1_bounds->closed_form);
  }
  if (theorem2_bounds) {
    out.emplace_back("theorem2.analytic", theorem2_bounds->analytic);
    if (above) {
      out.emplace_back("theorem2.intermediate", theorem2_bounds->intermediate);
      out.emplace_back("theorem2.closed_form", theorem2_bounds->closed_form);
    }
  }
  out.emplace_back("abramovich", linear.abramovich);
  out.emplace_back("abramovich_selberg", linear.abramovich_selberg);
  return out;
}

DegreeBoundReport assemble_bounds(const CurveModel& curve, const BoundOptions& options) {
  curve.validate();
  DegreeBoundReport r;
  r.label = curve.label;
  r.conductor = curve.conductor;
  r.known_degree = curve.known_degree;

  const Invariants inv = derive_invariants(curve);
  r.disc = inv.disc;
  r.period = periods(inv);
  r.lemma1 = lemma1_check(inv, r.period);
  if (!r.lemma1.ok) r.notes.push_back("discriminant inequality for 1/Omega failed");

  if (options.n2_override && !curve.n2) {
    r.n2_used = *options.n2_override;
    r.n2_source = ConductorSource::supplied;
  } else if (curve.n2) {
    r.n2_used = *curve.n2;
    r.n2_source = ConductorSource::supplied;
  } else {
    r.n2_used = curve.conductor * curve.conductor;
    r.n2_source = ConductorSource::fallback_N_squared;
  }

  const auto square_primes = primes_with_square_dividing(curve.conductor);
  r.semistable = square_primes.empty();
  if (options.semistable && *options.semistable != r.semistable) {
    r.semistable_flag_matches = false;
    r.notes.push_back("semistable flag disagrees with the squarefree test on N");
  }

  r.cm_discriminant = cm_field_discriminant(inv);
  const bool treat_as_cm = options.cm_mode == CmMode::cm ||
                           (options.cm_mode == CmMode::automatic && r.cm_discriminant != 0);
  if (!treat_as_cm) {
    r.region = RegionCase::noncm;
    if (r.cm_discriminant != 0) r.notes.push_back("curve has CM but non-CM region was forced");
  } else if (r.cm_discriminant == -3) {
    r.region = RegionCase::cm_zeta3;
  } else {
    r.region = RegionCase::cm_qi;
    if (r.cm_discriminant == 0) {
      r.notes.push_back("CM forced on a curve without CM; Q(i) constants used");
    } else if (r.cm_discriminant != -4) {
      r.notes.push_back("CM field other than Q(i), Q(zeta3); Q(i) constants asserted");
    }
  }

  const bool n2_ok = r.n2_used >= kMinSymSquareConductor;
  if (n2_ok) {
    const auto rc = region_for(r.region);
    r.region_width = rc.region_width(to_double(r.n2_used));
    // N6 = N2^2 / 9 needs 9 | N2^2; a supplied N2 without it gets the general relation.
    const bool cube_at_3 = valuation(curve.conductor, 3) == 3 && r.n2_used % 3 == 0;
    auto conductors = SymPowerConductors::make(r.n2_used, r.region, r.n2_source, cube_at_3);
    r.region_certified = certify_region(r.region, conductors).overall_pass();
  } else {
    r.notes.push_back("N2 below 142: symmetric-square bound unavailable");
  }

  r.fudge = fudge_factors(inv, curve.conductor, options.twist_minimal);
  r.fudge_product = fudge_product(r.fudge);
  std::vector<double> inverses;
  for (const auto& f : r.fudge) {
    inverses.push_back(f.u_inverse_at_1);
    if (f.discriminant_credit) r.credit_primes.push_back(f.p);
    if (!f.determined) {
      r.notes.push_back("epsilon at p=" + std::to_string(f.p) + " undetermined; conservative value used");
    }
  }

  const auto primes_1mod3 = squared_primes_1mod3(curve.conductor);
  if (n2_ok) {
    r.l_value_lower = symsq_lower_bound(r.n2_used);
    r.formula_bound = degree_formula_bound(curve.conductor, r.period.omega, *r.l_value_lower, inverses);
    r.theorem2_bounds = theorem2(curve.conductor, r.n2_used, r.period.omega, inverses, primes_1mod3);
    r.chain_analytic_intermediate = r.theorem2_bounds->analytic >= r.theorem2_bounds->intermediate;
  }
  if (r.semistable && curve.conductor * curve.conductor >= kMinSymSquareConductor) {
    r.theorem1_bounds = theorem1(curve.conductor, r.period.omega);
    if (inv.abs_disc >= curve.conductor) {
      r.theorem1_chain = r.theorem1_bounds->analytic >= r.theorem1_bounds->closed_form;
    }
  }
  r.linear = linear_bounds(curve.conductor);

  if (curve.conductor < kTableThreshold) {
    r.warning = kThresholdWarning;
    if (r.theorem1_bounds) r.theorem1_bounds->below_threshold = true;
    if (r.theorem2_bounds) r.theorem2_bounds->below_threshold = true;
  } else {
    r.prime_product = prime_product_bound(curve.conductor, primes_1mod3);
    if (r.theorem2_bounds) {
      r.chain_intermediate_closed = r.theorem2_bounds->intermediate >= r.theorem2_bounds->closed_form;
    }
    if (!r.prime_product->ok) {
      r.notes.push_back("prime-sum bound fails at this N; intermediate vs closed form not guaranteed");
    }
  }

  r.symsq_estimate = symsq_value_estimate(curve, options.estimator_cutoff);
  r.degree_estimate = degree_formula_bound(curve.conductor, r.period.omega, r.symsq_estimate, inverses);
  if (r.l_value_lower && r.symsq_estimate < *r.l_value_lower) {
    r.notes.push_back("Euler-product estimate of L(Sym^2 E, 1) is below the certified lower bound");
  }

  if (r.known_degree) {
    const double deg = to_double(*r.known_degree);
    bool ok = true;
    for (const auto& [name, value] : r.certified_bounds()) {
      if (value > deg) {
        ok = false;
        r.notes.push_back(name + " exceeds the known degree");
      }
    }
    r.consistency_ok = ok;
  }
  return r;
}

}  // namespace moddeg
