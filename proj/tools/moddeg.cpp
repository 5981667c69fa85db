// Command-line front end: curve invariants, per-curve degree bounds, and the
// certification suite for the constants used by the bounds.
#include "moddeg/errors.hpp"
#include "moddeg/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

moddeg::Integer parse_n2(const std::string& text) {
  try {
    return moddeg::parse_integer(text);
  } catch (const std::exception&) {
    throw moddeg::InputError("bad --n2 value '" + text + "'");
  }
}

int cmd_invariants(const std::string& coefficients) {
  const auto curve = moddeg::parse_coefficient_list(coefficients);
  std::cout << moddeg::invariants_json(curve).dump(2) << '\n';
  return kExitOk;
}

int cmd_bound(const std::string& input, const std::string& output, const std::string& n2,
              const std::string& assume_cm, unsigned jobs) {
  moddeg::BoundOptions opts;
  if (!n2.empty()) opts.n2_override = parse_n2(n2);
  if (assume_cm == "cm") {
    opts.cm_mode = moddeg::CmMode::cm;
  } else if (assume_cm == "noncm") {
    opts.cm_mode = moddeg::CmMode::noncm;
  }

  std::ifstream in(input);
  if (!in) throw moddeg::InputError("cannot open " + input);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!output.empty() && output != "-") {
    file.open(output);
    if (!file) throw moddeg::InputError("cannot write " + output);
    out = &file;
  }
  const auto summary = moddeg::run_bound_stream(in, *out, opts, jobs);
  std::cerr << summary.records << " records, " << summary.errors << " errors, " << summary.inconsistent
            << " inconsistent\n";
  return summary.inconsistent > 0 ? kExitFailure : kExitOk;
}

int cmd_verify(bool as_json, const std::string& n2) {
  const moddeg::Integer value = n2.empty() ? moddeg::Integer(142) : parse_n2(n2);
  const auto suite = moddeg::verify_lemmas(value);
  if (as_json) {
    std::cout << moddeg::lemma_suite_json(suite).dump(2) << '\n';
  } else {
    moddeg::print_lemma_suite(std::cout, suite);
  }
  return suite.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit lower bounds for the modular degree of rational elliptic curves"};
  app.require_subcommand(1);

  std::string coefficients;
  auto* inv = app.add_subcommand("invariants", "Invariants, periods and the 1/Omega check for one curve");
  inv->add_option("--a", coefficients, "a1,a2,a3,a4,a6")->required()->allow_extra_args(false);

  std::string input, output, n2, assume_cm = "auto";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* bound = app.add_subcommand("bound", "Degree bounds for every curve in a JSONL file");
  bound->add_option("--input", input, "JSONL curve records")->required();
  bound->add_option("--output", output, "JSONL reports (default stdout)");
  bound->add_option("--n2", n2, "symmetric-square conductor for records that do not supply one");
  bound->add_option("--assume-cm", assume_cm, "region selection")
      ->check(CLI::IsMember({"auto", "cm", "noncm"}));
  bound->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  bool as_json = false;
  std::string verify_n2;
  auto* verify = app.add_subcommand("verify-lemmas", "Certify the numerical constants of the proof chain");
  verify->add_flag("--json", as_json, "machine-readable output");
  verify->add_option("--n2", verify_n2, "symmetric-square conductor (default 142)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*inv) return cmd_invariants(coefficients);
    if (*bound) return cmd_bound(input, output, n2, assume_cm, jobs);
    return cmd_verify(as_json, verify_n2);
  } catch (const moddeg::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const moddeg::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
