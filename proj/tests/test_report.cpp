#include "moddeg/errors.hpp"
#include "moddeg/report.hpp"

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

using namespace moddeg;

namespace {

std::vector<Json> parse_lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(Json::parse(line));
  return out;
}

void check_finite(const Json& j) {
  if (j.is_number_float()) CHECK(std::isfinite(j.get<double>()));
  if (j.is_structured()) {
    for (const auto& child : j) check_finite(child);
  }
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(real_json(1.0 / 3).dump() == "0.333333333333");
  CHECK(real_json(123456789.123456789).dump() == "123456789.123");
  CHECK(real_json(std::nan("")).is_null());
  CHECK(integer_json(Integer(37)).dump() == "37");
  const Integer limit = Integer(1) << 53;
  CHECK(integer_json(limit).is_number_integer());
  CHECK(integer_json(limit + 1).dump() == "\"9007199254740993\"");
  CHECK(integer_json(-(limit + 1)).is_string());
}

TEST_CASE("record parsing") {
  const auto rec = parse_curve_record(Json::parse(
      R"({"label":"x","a":[0,0,1,-1,"0"],"conductor":"37","deg_phi":2,"semistable":true,"twist_minimal":false})"));
  CHECK(rec.curve.label == "x");
  CHECK(rec.curve.conductor == 37);
  CHECK(*rec.curve.known_degree == 2);
  CHECK(*rec.semistable);
  CHECK_FALSE(rec.twist_minimal);
  CHECK(integer_from_json(Json("123456789012345678901234567890"), "n") == Integer("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_curve_record(Json::parse(R"({"a":[0,0,1,-1],"conductor":37})")), InputError);
  CHECK_THROWS_AS(parse_curve_record(Json::parse(R"({"a":[0,0,1,-1,0]})")), InputError);
  CHECK_THROWS_AS(parse_curve_record(Json::parse(R"({"a":[0,0,1,-1,0.5],"conductor":37})")), InputError);
  CHECK_THROWS_AS(parse_curve_record(Json::parse(R"({"a":[0,0,1,-1,0],"conductor":0})")), InputError);
  CHECK_THROWS_AS(parse_curve_record(Json::parse("[1,2]")), InputError);
}

TEST_CASE("coefficient lists") {
  CHECK(parse_coefficient_list("0,0,1,-1,0").a[3] == -1);
  CHECK_THROWS_AS(parse_coefficient_list("0,0,1,-1"), InputError);
  CHECK_THROWS_AS(parse_coefficient_list("0,0,1,-1,0,0"), InputError);
  CHECK_THROWS_AS(parse_coefficient_list("0,0,x,-1,0"), InputError);
}

TEST_CASE("invariants document") {
  const auto j = invariants_json(parse_coefficient_list("0,0,1,-1,0"));
  CHECK(j["disc"] == 37);
  CHECK(j["lemma1_ok"] == true);
  CHECK(j["case_tag"] == "pos_disc");
  const auto k = invariants_json(parse_coefficient_list("0,0,0,-1,1"));
  CHECK(k["disc"] == -368);
  CHECK(k["case_tag"] == "neg_disc");
  CHECK_THROWS_AS(invariants_json(parse_coefficient_list("0,0,0,0,0")), SingularCurveError);
}

TEST_CASE("bound stream keeps order and reports bad lines") {
  const std::string input =
      R"({"label":"37a1","a":[0,0,1,-1,0],"conductor":37,"deg_phi":2})" "\n"
      "not json\n"
      "\n"
      R"({"label":"synthetic","a":[0,0,1,-1,0],"conductor":25000})" "\n"
      R"({"label":"sing","a":[0,0,0,0,0],"conductor":1})" "\n";
  std::istringstream in(input);
  std::ostringstream out;
  const auto summary = run_bound_stream(in, out, {}, 3);
  CHECK(summary.records == 4);
  CHECK(summary.errors == 2);
  CHECK(summary.inconsistent == 0);
  const auto lines = parse_lines(out.str());
  REQUIRE(lines.size() == 4);
  CHECK(lines[0]["label"] == "37a1");
  CHECK(lines[0]["consistency_ok"] == true);
  CHECK(lines[0]["warning"] == "below paper threshold; consult tables");
  CHECK(lines[1]["line"] == 2);
  CHECK(lines[1].contains("error"));
  CHECK(lines[2]["label"] == "synthetic");
  CHECK_FALSE(lines[2].contains("warning"));
  for (const char* key : {"formula_bound", "omega"}) CHECK(lines[2][key].get<double>() > 0);
  for (const char* key : {"analytic", "intermediate", "closed_form"}) {
    CHECK(lines[2]["theorem2_bounds"][key].get<double>() > 0);
  }
  for (const char* key : {"abramovich", "abramovich_selberg", "ogg_estimate"}) {
    CHECK(lines[2]["linear_bounds"][key].get<double>() > 0);
  }
  CHECK(lines[3]["line"] == 5);
  CHECK(lines[3]["error"] == "singular curve");
  for (const auto& j : lines) check_finite(j);
}

TEST_CASE("inconsistent records are counted") {
  std::istringstream in(R"({"a":[0,0,1,-7,6],"conductor":5077,"deg_phi":1984})");
  std::ostringstream out;
  CHECK(run_bound_stream(in, out, {}, 1).inconsistent == 0);  
  std::istringstream in2(R"({"a":[0,0,1,-1,0],"conductor":40000000,"deg_phi":1})");
  std::ostringstream out2;
  CHECK(run_bound_stream(in2, out2, {}, 1).inconsistent == 1);
}

TEST_CASE("output is identical across worker counts") {
  std::ifstream f(MODDEG_DATA_DIR "/curves.jsonl");
  REQUIRE(f);
  std::stringstream buf;
  buf << f.rdbuf();
  std::string reference;
  for (unsigned jobs : {1u, 2u, 8u}) {
    std::istringstream in(buf.str());
    std::ostringstream out;
    run_bound_stream(in, out, {}, jobs);
    if (reference.empty()) {
      reference = out.str();
    } else {
      CHECK(out.str() == reference);
    }
  }
  for (const auto& j : parse_lines(reference)) check_finite(j);
}

TEST_CASE("lemma suite") {
  const auto ok = verify_lemmas(142);
  CHECK(ok.ok());
  CHECK(ok.failures.empty());
  const auto j = lemma_suite_json(ok);
  CHECK(j["ok"] == true);
  CHECK(j["sections"].size() == ok.sections.size());
  const auto bad = verify_lemmas(100);
  CHECK_FALSE(bad.ok());
  CHECK(bad.failures.size() >= 3);
  std::ostringstream text;
  print_lemma_suite(text, bad);
  CHECK(text.str().find("certification failed") != std::string::npos);
}
