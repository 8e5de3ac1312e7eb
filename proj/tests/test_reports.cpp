#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ostrings/asymptotics.hpp"
#include "ostrings/circle.hpp"
#include "ostrings/reports.hpp"
#include "ostrings/series.hpp"

using namespace ostrings;

TEST_CASE("coefficient tables") {
  const auto pbar = qseries::overpartition_gf(4);
  CHECK(io::coeff_table_csv(pbar, 4) ==
        "n,coefficient\n0,1\n1,2\n2,4\n3,8\n4,14\n");
  CHECK(io::coeff_table_json("pbar", 0, pbar, 4) ==
        "{\"series\": \"pbar\", \"n_max\": 4, "
        "\"coefficients\": [\"1\", \"2\", \"4\", \"8\", \"14\"]}\n");
  // coefficients always as decimal strings, never native numbers
  const auto big = qseries::overpartition_gf(2000);
  const auto json = io::coeff_table_json("pbar", 0, big, 2000);
  CHECK(json.find("\"" + to_decimal(big[2000]) + "\"") != std::string::npos);
}

TEST_CASE("asymptotic rows carry the pinned csv columns") {
  const auto f1 = qseries::string_diff_gf(1, 100);
  const auto rows = asym::asymptotic_report(asym::ReportKind::AB, 1, {100},
                                            f1, 256);
  const auto csv = io::asym_rows_csv(rows);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "kind,parameter,N,exact,main_term,relative_error");
  CHECK(csv.find("AB,1,100,181648428,") != std::string::npos);

  const auto jsonl = io::asym_rows_jsonl(rows);
  CHECK(jsonl.find("\"exact\": \"181648428\"") != std::string::npos);

  // 20 significant digits in the float rendering
  const Real third = Real::of(1L, 256) / Real::of(3L, 256);
  CHECK(third.str() == "0.33333333333333333333");
}

TEST_CASE("contour report fields") {
  const auto f1 = qseries::string_diff_gf(1, 10);
  const auto rep = circle::contour_coefficient(
      circle::Family::string_diff, 1, 10, circle::default_contour_points(10),
      128, f1[10]);
  const auto json = io::contour_report_json(rep);
  for (const char* key :
       {"\"kind\"", "\"parameter\"", "\"N\"", "\"n_points\"",
        "\"precision_bits\"", "\"I_major\"", "\"I_minor\"", "\"total\"",
        "\"rounded\"", "\"exact\"", "\"match\""})
    CHECK(json.find(key) != std::string::npos);
  CHECK(json.find("\"match\": true") != std::string::npos);
}

TEST_CASE("writers are byte-deterministic") {
  const auto f2 = qseries::string_diff_gf(2, 64);
  const auto rows = asym::asymptotic_report(asym::ReportKind::AB, 2,
                                            {16, 64}, f2, 256);
  CHECK(io::asym_rows_jsonl(rows) == io::asym_rows_jsonl(rows));
  CHECK(io::oracle_check_record("C", 7, 2, 5, BigInt(5), true) ==
        "{\"stat\": \"C\", \"n\": 7, \"m\": 2, \"oracle\": \"5\", "
        "\"series\": \"5\", \"agree\": true}");
}
