// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
#include "moddeg/bounds.hpp"
#include "moddeg/fudge.hpp"
#include "moddeg/lvalue.hpp"
#include "moddeg/periods.hpp"
#include "moddeg/report.hpp"
#include "moddeg/special_functions.hpp"
#include "moddeg/zero_free.hpp"
#include "oracles.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace moddeg;

namespace {

// Tolerances, fixed here so a run cannot loosen them.
constexpr double kLemma1Tol = 1e-3;
constexpr double kPeriodRelTol = 1e-9;
constexpr double kEndpointTol = 1e-12;
constexpr double kBetaStarTol = 1e-8;
constexpr double kQuadratureTol = 1e-6;
constexpr double kSymSquareTol = 1e-6;
constexpr double kReportedTol = 1e-3;
constexpr int kRandomCurves = 10000;
constexpr int kPeriodCurvesPerSign = 12;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(const char* id, const char* title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s %-5s %-28s %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool near(double x, double target, double tol) { return std::fabs(x - target) <= tol; }

Outcome lemma1() {
  const auto k = lemma1_extremal_constants();
  std::mt19937_64 rng(20060101);
  int bad = 0;
  for (int i = 0; i < kRandomCurves; ++i) {
    const auto inv = derive_invariants(oracle::random_curve(rng, i % 2 ? 1000 : 1000000));
    if (!lemma1_check(inv).ok) ++bad;
  }
  const bool pass = near(k.k1, 13.7504, kLemma1Tol) && near(k.k2, 14.0449, kLemma1Tol) &&
                    k.k2 <= kLemma1Constant && bad == 0;
  return {pass, fmt("k1=%.6f k2=%.6f (<= 14.045) counterexamples=%d/%d", k.k1, k.k2, bad, kRandomCurves)};
}

Outcome period_oracle() {
  std::mt19937_64 rng(77);
  int pos = 0, neg = 0;
  double worst = 0;
  while (pos < kPeriodCurvesPerSign || neg < kPeriodCurvesPerSign) {
    const auto inv = derive_invariants(oracle::random_curve(rng, 2000));
    int& count = inv.disc_positive ? pos : neg;
    if (count >= kPeriodCurvesPerSign) continue;
    ++count;
    const auto pd = periods(inv);
    const auto ref = oracle::integral_periods(inv);
    worst = std::max({worst, std::fabs(pd.real_period / ref.real_period - 1),
                      std::fabs(pd.imag_part / ref.imag_part - 1), std::fabs(pd.omega / ref.area() - 1)});
  }
  return {worst <= kPeriodRelTol, fmt("curves=%d (+%d/-%d) max_rel_err=%.2e (<= %.0e)", pos + neg, pos, neg, worst,
                                      kPeriodRelTol)};
}

Outcome noncm() {
  const auto r = certify_noncm(SymPowerConductors::make(142, RegionCase::noncm));
  const double s = r.at("sigma_max").computed, d = r.at("digamma_sum").computed;
  const double m = r.at("middle_term").computed, t = r.at("contradiction_total").computed;
  const bool pass = r.overall_pass() && s <= 1.46 && d <= 1.74 && m <= -0.84 && near(m, -0.8417, kReportedTol) &&
                    t <= -0.30 && near(t, -0.3127, kReportedTol);
  return {pass, fmt("sigma=%.5f digamma=%.5f middle=%.5f total=%.5f", s, d, m, t)};
}

Outcome cm_qi() {
  const auto r = certify_cm_qi(SymPowerConductors::make(142, RegionCase::cm_qi));
  const double s = r.at("sigma_max").computed, g = r.at("gamma_terms").computed;
  const double m = r.at("middle_term").computed, t = r.at("contradiction_total").computed;
  const double d = region_cm_qi().delta_max, rt2 = std::sqrt(2.0);
  const double identity = std::fabs(std::pow(d * rt2 - 2 * rt2 + 2, 2) - 8 * rt2 * d);
  const bool pass = r.overall_pass() && s <= 1.8 && near(s, 1.7631, kReportedTol) && g <= 2.821 && m <= -0.612 &&
                    near(m, -0.613, kReportedTol) && t <= -0.726 && identity <= kEndpointTol;
  return {pass, fmt("sigma=%.5f gamma=%.5f middle=%.5f total=%.5f endpoint=%.1e", s, g, m, t, identity)};
}

Outcome cm_zeta3() {
  const auto c = trig_poly_expand(Rational(5, 2));
  const bool exact = c[0] == Rational(106, 16) && c[1] == Rational(171, 16) && c[2] == Rational(90, 16) &&
                     c[3] == Rational(25, 16);
  const auto q = quintic_beta_optimum();
  const auto r = certify_cm_zeta3(SymPowerConductors::make(142, RegionCase::cm_zeta3));
  const double s = r.at("sigma_max").computed, g = r.at("gamma_sum").computed;
  const double t = r.at("contradiction_total").computed;
  const bool pass = exact && near(q.beta_star, 2.629152166, kBetaStarTol) && r.overall_pass() && s <= 1.28 &&
                    g < 153 && t <= -7;
  return {pass, fmt("expansion_exact=%s beta*=%.9f sigma=%.5f gamma=%.4f total=%.4f", exact ? "yes" : "no",
                    q.beta_star, s, g, t)};
}

Outcome lemma4() {
  const auto q = lemma4_error_integral();
  const auto c = lemma4_certify(142);
  const double lb = symsq_lower_bound(Integer(142));
  const double log142 = std::log(142.0);
  const bool pass = q.value < 62 && q.abs_error_estimate <= kQuadratureTol && c.b >= 0.99 &&
                    c.log_x <= 4.2 * log142 && c.x_power <= 1.19 && near(c.x_power, 1.1806, kReportedTol) &&
                    near(lb, 0.0066590, kSymSquareTol) && c.report.overall_pass();
  return {pass, fmt("integral=%.6f err=%.1e b=%.7f logX=%.4f (<= %.4f) X^(1-b)=%.5f L>=%.7f", q.value,
                    q.abs_error_estimate, c.b, c.log_x, 4.2 * log142, c.x_power, lb)};
}

Outcome point_counting() {
  const auto e = oracle::curve({0, 0, 1, -1, 0}, 37);
  const auto a2 = trace_of_frobenius(e, 2), a3 = trace_of_frobenius(e, 3);
  std::mt19937_64 rng(10);
  int primes = 0, violations = 0;
  for (int i = 0; i < 10; ++i) {
    const auto c = oracle::random_curve(rng);
    const auto inv = derive_invariants(c);
    for (std::int64_t p = 2; p <= 1000; ++p) {
      if (!is_prime(p) || mod_small(inv.disc, p) == 0) continue;
      const auto a = trace_of_frobenius(c, inv, p);
      ++primes;
      if (static_cast<double>(a * a) > 4.0 * static_cast<double>(p)) ++violations;
    }
  }
  return {a2 == -2 && a3 == -3 && violations == 0,
          fmt("a2=%lld a3=%lld hasse_checks=%d violations=%d", static_cast<long long>(a2),
              static_cast<long long>(a3), primes, violations)};
}

Outcome twist_growth() {
  int cases = 0, bad = 0;
  for (std::int64_t p = 3; p <= 1000; p += 2) {
    if (!is_prime(p)) continue;
    ++cases;
    if (!twist_growth_check(p, 0, Reduction::multiplicative).ok) ++bad;
    for (std::int64_t a = -2 * p; a <= 2 * p; ++a) {
      if (a * a > 4 * p) continue;
      ++cases;
      if (!twist_growth_check(p, a, Reduction::good).ok) ++bad;
    }
  }
  const auto tight = twist_growth_check(3, 3, Reduction::good);
  const auto tight_neg = twist_growth_check(3, -3, Reduction::good);
  return {bad == 0 && tight.ok && tight_neg.ok && tight.lhs_factor == 14,
          fmt("cases=%d failures=%d tight p=3,a=+-3: %.0f >= %.4f", cases, bad, tight.lhs_factor,
              tight.rhs_factor)};
}

Outcome dataset() {
  std::ifstream in(MODDEG_DATA_DIR "/curves.jsonl");
  if (!in) return {false, "cannot open dataset"};
  std::string line;
  int records = 0, with_degree = 0, inconsistent = 0, chain_records = 0, chain_bad = 0, below = 0;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (line.empty()) continue;
    const auto rec = parse_curve_record(Json::parse(line));
    BoundOptions opts;
    opts.semistable = rec.semistable;
    opts.twist_minimal = rec.twist_minimal;
    const auto r = assemble_bounds(rec.curve, opts);
    ++records;
    if (r.known_degree) {
      ++with_degree;
      if (!r.consistency_ok.value_or(false)) ++inconsistent;
    }
    if (r.theorem2_bounds) {
      ++chain_records;
      // The closed form is asserted only above the conductor threshold.
      const bool above = rec.curve.conductor >= kTableThreshold;
      if (!above) ++below;
      const bool ok = *r.chain_analytic_intermediate && (!above || r.chain_intermediate_closed.value_or(false));
      if (!ok) ++chain_bad;
    }
    if (r.theorem1_chain && !*r.theorem1_chain) ++chain_bad;
  }
  return {records >= 10 && with_degree == records && inconsistent == 0 && chain_bad == 0,
          fmt("records=%d with_degree=%d inconsistent=%d chain_checked=%d (%d below 20000: first link only) "
              "chain_failures=%d",
              records, with_degree, inconsistent, chain_records, below, chain_bad)};
}

Outcome crossover() {
  const auto c = crossover_check();
  return {c.ok && c.log_n_star >= 86.0 && c.log_n_star <= 87.5, fmt("log N* = %.4f in [86.0, 87.5]", c.log_n_star)};
}

}  // namespace

int main() {
  run("AC1", "lemma1-constants", lemma1);
  run("AC2", "period-oracle", period_oracle);
  run("AC3", "noncm-certification", noncm);
  run("AC4", "qi-certification", cm_qi);
  run("AC5", "zeta3-certification", cm_zeta3);
  run("AC6", "lemma4", lemma4);
  run("AC7", "point-counting", point_counting);
  run("AC8", "twist-growth", twist_growth);
  run("AC9", "bound-consistency", dataset);
  run("AC10", "crossover", crossover);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
