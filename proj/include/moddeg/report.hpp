#pragma once

#include "moddeg/bounds.hpp"
#include "moddeg/certification.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace moddeg {

using Json = nlohmann::ordered_json;

/// Input error in a dataset line or command-line argument (exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reals rounded to 12 significant digits; non-finite values become null.
Json real_json(double x);
/// Exact integers as JSON numbers up to 2^53 and decimal strings beyond.
Json integer_json(const Integer& n);

/// Accepts a JSON integer or a decimal string.
Integer integer_from_json(const Json& j, const std::string& field);

struct CurveRecord {
  CurveModel curve;
  std::optional<bool> semistable;
  bool twist_minimal = true;
};

/// Throws InputError on missing or malformed fields.
CurveRecord parse_curve_record(const Json& j);

/// "a1,a2,a3,a4,a6" as given on the command line.
CurveModel parse_coefficient_list(const std::string& text);

Json invariants_json(const CurveModel& curve);
Json report_json(const DegreeBoundReport& report);
Json cert_json(const CertReport& report);

struct StreamSummary {
  std::size_t records = 0;
  std::size_t errors = 0;
  std::size_t inconsistent = 0;
};

/// Reads JSONL curve records, writes one report or error object per line in
/// input order. Records are processed on `jobs` worker threads.
StreamSummary run_bound_stream(std::istream& in, std::ostream& out, const BoundOptions& defaults,
                               unsigned jobs);

struct LemmaSuite {
  std::vector<CertReport> sections;
  std::vector<std::string> failures;  // precondition or numeric failures
  bool ok() const;
};

/// Every certification of the proof chain at the given N2 (default 142).
LemmaSuite verify_lemmas(const Integer& n2);

Json lemma_suite_json(const LemmaSuite& suite);
void print_lemma_suite(std::ostream& out, const LemmaSuite& suite);

}  // namespace moddeg
