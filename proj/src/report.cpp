#include "moddeg/report.hpp"

#include "moddeg/errors.hpp"
#include "moddeg/lvalue.hpp"
#include "moddeg/periods.hpp"
#include "moddeg/special_functions.hpp"
#include "moddeg/zero_free.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

namespace moddeg {
namespace {

const Integer kMaxSafeInteger = (Integer(1) << 53);

std::string case_name(PeriodCase c) { return c == PeriodCase::pos_disc ? "pos_disc" : "neg_disc"; }

Json fudge_json(const FudgeFactor& f) {
  Json j;
  j["p"] = f.p;
  j["epsilon"] = f.epsilon;
  j["u_inverse_at_1"] = real_json(f.u_inverse_at_1);
  j["determined"] = f.determined;
  j["discriminant_credit"] = f.discriminant_credit;
  return j;
}

Json optional_real(const std::optional<double>& x) { return x ? real_json(*x) : Json(nullptr); }
Json optional_bool(const std::optional<bool>& x) { return x ? Json(*x) : Json(nullptr); }

Json error_json(std::size_t line, const std::string& message) {
  Json j;
  j["line"] = line;
  j["error"] = message;
  return j;
}

struct LineResult {
  std::string text;
  bool error = false;
  bool inconsistent = false;
};

LineResult process_line(std::size_t line_no, const std::string& line, const BoundOptions& defaults) {
  LineResult out;
  try {
    const Json j = Json::parse(line);
    CurveRecord rec = parse_curve_record(j);
    BoundOptions opts = defaults;
    opts.semistable = rec.semistable;
    opts.twist_minimal = rec.twist_minimal;
    const DegreeBoundReport report = assemble_bounds(rec.curve, opts);
    Json rj = report_json(report);
    rj["line"] = line_no;
    out.text = rj.dump();
    out.inconsistent = report.consistency_ok.has_value() && !*report.consistency_ok;
  } catch (const std::exception& e) {
    out.text = error_json(line_no, e.what()).dump();
    out.error = true;
  }
  return out;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }

}  // namespace

Json real_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json integer_json(const Integer& n) {
  if (abs(n) <= kMaxSafeInteger) return static_cast<std::int64_t>(n);
  return n.str();
}

Integer integer_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InputError("field '" + field + "' is not an exact integer");
}

CurveRecord parse_curve_record(const Json& j) {
  if (!j.is_object()) throw InputError("record is not a JSON object");
  CurveRecord rec;
  auto& c = rec.curve;
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) throw InputError("field 'label' is not text");
    c.label = it->get<std::string>();
  }
  const auto a = j.find("a");
  if (a == j.end() || !a->is_array() || a->size() != 5) {
    throw InputError("field 'a' must list five integers");
  }
  for (std::size_t i = 0; i < 5; ++i) c.a[i] = integer_from_json((*a)[i], "a");
  const auto n = j.find("conductor");
  if (n == j.end()) throw InputError("missing field 'conductor'");
  c.conductor = integer_from_json(*n, "conductor");
  if (auto it = j.find("n2"); it != j.end() && !it->is_null()) c.n2 = integer_from_json(*it, "n2");
  if (auto it = j.find("deg_phi"); it != j.end() && !it->is_null()) {
    c.known_degree = integer_from_json(*it, "deg_phi");
  }
  if (auto it = j.find("semistable"); it != j.end() && !it->is_null()) {
    if (!it->is_boolean()) throw InputError("field 'semistable' is not boolean");
    rec.semistable = it->get<bool>();
  }
  if (auto it = j.find("twist_minimal"); it != j.end() && !it->is_null()) {
    if (!it->is_boolean()) throw InputError("field 'twist_minimal' is not boolean");
    rec.twist_minimal = it->get<bool>();
  }
  try {
    c.validate();
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  return rec;
}

CurveModel parse_coefficient_list(const std::string& text) {
  CurveModel c;
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i == 5) throw InputError("expected five coefficients");
    try {
      c.a[i++] = parse_integer(item);
    } catch (const std::exception&) {
      throw InputError("bad coefficient '" + item + "'");
    }
  }
  if (i != 5) throw InputError("expected five coefficients");
  return c;
}

Json invariants_json(const CurveModel& curve) {
  const Invariants inv = derive_invariants(curve);
  const RootData roots = two_torsion_roots(inv);
  const PeriodData pd = periods(inv, roots);
  const Lemma1Check l1 = lemma1_check(inv, pd);

  Json j;
  Json a = Json::array();
  for (const auto& x : curve.a) a.push_back(integer_json(x));
  j["a"] = a;
  for (auto [name, value] : {std::pair{"b2", &inv.b2}, {"b4", &inv.b4}, {"b6", &inv.b6}, {"b8", &inv.b8},
                             {"c4", &inv.c4}, {"c6", &inv.c6}, {"disc", &inv.disc}, {"abs_disc", &inv.abs_disc}}) {
    j[name] = integer_json(*value);
  }
  j["disc_positive"] = inv.disc_positive;
  j["j_num"] = integer_json(inv.j_num);
  j["j_den"] = integer_json(inv.j_den);
  j["cm_discriminant"] = cm_field_discriminant(inv);
  Json r;
  if (roots.kind == RootKind::three_real) {
    r["kind"] = "three_real";
    r["e1"] = real_json(roots.e1);
    r["e2"] = real_json(roots.e2);
    r["e3"] = real_json(roots.e3);
  } else {
    r["kind"] = "one_real";
    r["r"] = real_json(roots.r);
    r["Z"] = real_json(roots.z);
    r["r_tilde"] = real_json(roots.r_tilde);
  }
  j["roots"] = r;
  j["omega"] = real_json(pd.omega);
  j["real_period"] = real_json(pd.real_period);
  j["imag_part"] = real_json(pd.imag_part);
  j["inv_omega"] = real_json(pd.inv_omega);
  j["case_tag"] = case_name(pd.case_tag);
  j["t_or_c"] = real_json(pd.t_or_c);
  j["lemma1_rhs"] = real_json(l1.rhs);
  j["lemma1_margin"] = real_json(l1.margin());
  j["lemma1_ok"] = l1.ok;
  return j;
}

Json report_json(const DegreeBoundReport& r) {
  Json j;
  j["label"] = r.label;
  j["N"] = integer_json(r.conductor);
  j["n2_used"] = integer_json(r.n2_used);
  j["n2_source"] = to_string(r.n2_source);
  j["disc"] = integer_json(r.disc);
  j["omega"] = real_json(r.period.omega);
  j["case_tag"] = case_name(r.period.case_tag);
  j["lemma1_ok"] = r.lemma1.ok;
  j["cm_discriminant"] = r.cm_discriminant;
  j["region"] = to_string(r.region);
  j["region_width"] = optional_real(r.region_width);
  j["region_certified"] = optional_bool(r.region_certified);
  j["semistable"] = r.semistable;
  j["semistable_flag_matches"] = r.semistable_flag_matches;
  Json fudge = Json::array();
  for (const auto& f : r.fudge) fudge.push_back(fudge_json(f));
  j["fudge_factors"] = fudge;
  j["fudge_product"] = real_json(r.fudge_product);
  j["credit_primes"] = r.credit_primes;
  j["l_value_lower"] = optional_real(r.l_value_lower);
  j["formula_bound"] = optional_real(r.formula_bound);
  if (r.theorem1_bounds) {
    j["theorem1_bounds"] = {{"analytic", real_json(r.theorem1_bounds->analytic)},
                            {"closed_form", real_json(r.theorem1_bounds->closed_form)}};
  } else {
    j["theorem1_bounds"] = nullptr;
  }
  if (r.theorem2_bounds) {
    j["theorem2_bounds"] = {{"analytic", real_json(r.theorem2_bounds->analytic)},
                            {"intermediate", real_json(r.theorem2_bounds->intermediate)},
                            {"closed_form", real_json(r.theorem2_bounds->closed_form)}};
  } else {
    j["theorem2_bounds"] = nullptr;
  }
  j["linear_bounds"] = {{"abramovich", real_json(r.linear.abramovich)},
                        {"abramovich_selberg", real_json(r.linear.abramovich_selberg)},
                        {"ogg_estimate", real_json(r.linear.ogg_estimate)},
                        {"ogg_prime", r.linear.ogg_prime},
                        {"ogg_heuristic", true}};
  if (r.prime_product) {
    j["prime_product"] = {{"actual_log_sum", real_json(r.prime_product->actual_log_sum)},
                          {"closed_form", real_json(r.prime_product->closed_form)},
                          {"multiplier", real_json(r.prime_product->multiplier)},
                          {"hypothesis_ok", r.prime_product->hypothesis_ok},
                          {"ok", r.prime_product->ok}};
  } else {
    j["prime_product"] = nullptr;
  }
  j["chain"] = {{"theorem1_analytic_ge_closed", optional_bool(r.theorem1_chain)},
                {"theorem2_analytic_ge_intermediate", optional_bool(r.chain_analytic_intermediate)},
                {"theorem2_intermediate_ge_closed", optional_bool(r.chain_intermediate_closed)}};
  j["known_degree"] = r.known_degree ? integer_json(*r.known_degree) : Json(nullptr);
  j["consistency_ok"] = optional_bool(r.consistency_ok);
  j["estimate"] = {{"symsq_value", real_json(r.symsq_estimate)},
                   {"degree", real_json(r.degree_estimate)},
                   {"rigorous", false}};
  if (r.warning) j["warning"] = *r.warning;
  j["notes"] = r.notes;
  return j;
}

Json cert_json(const CertReport& report) {
  Json j;
  j["case_tag"] = report.case_tag;
  Json w = Json::array();
  for (const auto& p : report.waypoints) {
    Json e;
    e["name"] = p.name;
    e["computed"] = real_json(p.computed);
    e["relation"] = p.relation_text();
    e["bound"] = real_json(p.bound);
    if (p.relation == Relation::within) e["bound_hi"] = real_json(p.bound_hi);
    e["margin"] = real_json(p.margin);
    e["pass"] = p.pass;
    w.push_back(e);
  }
  j["waypoints"] = w;
  j["notes"] = report.notes;
  j["overall_pass"] = report.overall_pass();
  return j;
}

StreamSummary run_bound_stream(std::istream& in, std::ostream& out, const BoundOptions& defaults,
                               unsigned jobs) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (!blank(line)) lines.emplace_back(no, line);
  }
  std::vector<LineResult> results(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < lines.size();) {
      results[i] = process_line(lines[i].first, lines[i].second, defaults);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(lines.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  StreamSummary summary;
  for (const auto& r : results) {
    out << r.text << '\n';
    ++summary.records;
    if (r.error) ++summary.errors;
    if (r.inconsistent) ++summary.inconsistent;
  }
  return summary;
}

bool LemmaSuite::ok() const {
  if (!failures.empty()) return false;
  for (const auto& s : sections) {
    if (!s.overall_pass()) return false;
  }
  return true;
}

LemmaSuite verify_lemmas(const Integer& n2) {
  LemmaSuite suite;
  auto guarded = [&](const std::string& what, auto&& fn) {
    try {
      suite.sections.push_back(fn());
    } catch (const std::exception& e) {
      suite.failures.push_back(what + ": " + e.what());
    }
  };

  guarded("lemma1", [] {
    const auto k = lemma1_extremal_constants();
    CertReport r{"lemma1", {}, {}};
    r.waypoints.push_back(Waypoint::at_most("k1_three_real", k.k1, kLemma1Constant));
    r.waypoints.push_back(Waypoint::at_most("k2_one_real", k.k2, kLemma1Constant));
    return r;
  });
  guarded("certify_noncm", [&] { return certify_noncm(SymPowerConductors::make(n2, RegionCase::noncm)); });
  guarded("certify_cm_qi", [&] { return certify_cm_qi(SymPowerConductors::make(n2, RegionCase::cm_qi)); });
  guarded("certify_cm_zeta3",
          [&] { return certify_cm_zeta3(SymPowerConductors::make(n2, RegionCase::cm_zeta3)); });
  guarded("lemma4", [&] {
    auto cert = lemma4_certify(n2);
    cert.report.case_tag = "lemma4";
    return cert.report;
  });
  guarded("error_integral", [] {
    const auto q = lemma4_error_integral();
    const auto printed = lemma4_error_integral(ErrorIntegrand::printed);
    CertReport r{"error_integral", {}, {}};
    r.waypoints.push_back(Waypoint::less_than("integral", q.value, 62));
    r.waypoints.push_back(Waypoint::at_most("integral_over_pi", q.value / std::numbers::pi, kErrorConstant));
    r.waypoints.push_back(Waypoint::at_most("abs_error_estimate", q.abs_error_estimate, 1e-6, 0));
    r.notes.push_back("integrand with (25/4 + t^2)^{3/2} evaluates to " + std::to_string(printed.value));
    return r;
  });
  guarded("trig_poly", [] {
    CertReport r{"trig_poly", {}, {}};
    const auto c = trig_poly_expand(Rational(5, 2));
    const std::array<int, 4> expected{106, 171, 90, 25};
    for (std::size_t i = 0; i < 4; ++i) {
      const Rational diff = c[i] * 16 - expected[i];
      r.waypoints.push_back(Waypoint::vanishes("c" + std::to_string(i) + "_times_16_minus_" +
                                                   std::to_string(expected[i]),
                                               boost::multiprecision::abs(diff) == 0 ? 0.0 : 1.0, 0));
    }
    // Each polynomial vanishes at theta = pi, so the grid minimum is zero up to rounding.
    r.waypoints.push_back(Waypoint::at_least("beta_5_2_min", trig_poly_grid_min(trig_poly_expand(2.5), 20000), -1e-12, 0));
    r.waypoints.push_back(Waypoint::at_least("qi_min", trig_poly_grid_min(trig_poly_qi(), 20000), -1e-12, 0));
    return r;
  });
  guarded("quintic", [] {
    const auto q = quintic_beta_optimum();
    CertReport r{"quintic", {}, {}};
    r.waypoints.push_back(Waypoint::within("root", q.root, 1, 2));
    r.waypoints.push_back(Waypoint::vanishes("residual", quintic(q.root), 1e-9));
    r.waypoints.push_back(Waypoint::within("beta_star", q.beta_star, 2.629152, 2.629153));
    r.waypoints.push_back(Waypoint::at_least("beta_star_min", trig_poly_grid_min(trig_poly_expand(q.beta_star), 20000), -1e-12, 0));
    return r;
  });
  guarded("crossover", [] {
    const auto c = crossover_check();
    CertReport r{"crossover", {}, {}};
    r.waypoints.push_back(Waypoint::within("log_N_star", c.log_n_star, 86.0, 87.5));
    return r;
  });
  return suite;
}

Json lemma_suite_json(const LemmaSuite& suite) {
  Json j;
  Json sections = Json::array();
  for (const auto& s : suite.sections) sections.push_back(cert_json(s));
  j["sections"] = sections;
  j["failures"] = suite.failures;
  j["ok"] = suite.ok();
  return j;
}

void print_lemma_suite(std::ostream& out, const LemmaSuite& suite) {
  char buf[256];
  for (const auto& s : suite.sections) {
    out << "[" << s.case_tag << "]\n";
    for (const auto& w : s.waypoints) {
      char bound[96];
      if (w.relation == Relation::within) {
        std::snprintf(bound, sizeof bound, "[%.10g, %.10g]", w.bound, w.bound_hi);
      } else {
        std::snprintf(bound, sizeof bound, "%.10g", w.bound);
      }
      std::snprintf(buf, sizeof buf, "  %-4s %-36s %.10g %s %s\n", w.pass ? "ok" : "FAIL", w.name.c_str(),
                    w.computed, w.relation_text().c_str(), bound);
      out << buf;
    }
    for (const auto& note : s.notes) out << "  note: " << note << '\n';
  }
  for (const auto& f : suite.failures) out << "FAILED " << f << '\n';
  out << (suite.ok() ? "all waypoints pass" : "certification failed") << '\n';
}

}  // namespace moddeg
