#include <doctest.h>

#include "weylbn/suites.hpp"

using namespace weylbn;

TEST_CASE("suite summary") {
  SuiteResult s{"demo", {}, 0};
  s.add("a", {}, 1, 1, true);
  s.add("b", {}, 1, 2, false);
  CHECK(s.total() == 2);
  CHECK(s.passed() == 1);
  CHECK(s.failed() == 1);
  CHECK_FALSE(s.pass());
}

TEST_CASE("report documents are byte-stable") {
  const auto first = report_document({suite_prop7(4), suite_coxeter()}).dump(2);
  const auto second = report_document({suite_prop7(4), suite_coxeter()}).dump(2);
  CHECK(first == second);
  const Json doc = Json::parse(first);
  CHECK(doc["schema"] == 1);
  CHECK(doc["pass"] == true);
  CHECK_FALSE(doc["suites"][0].contains("wall_time_ms"));
  CHECK(report_document({suite_prop7(3)}, true)["suites"][0].contains("wall_time_ms"));
}

TEST_CASE("lemma2 suite filters by family") {
  const auto s = suite_lemma2(3, {Family::A});
  REQUIRE(s.total() == 5);
  CHECK(s.pass());
  CHECK(s.cases[2].id == "A3/1");
  CHECK(s.cases[2].actual["count"] == 2);
}

TEST_CASE("bn suite on the standard SL3(F2) system") {
  const auto s = suite_bn(standard_sl_system(3, 2), std::pair{3, 2});
  CHECK(s.pass());
  CHECK(s.cases.front().actual["cells"]["1 2 1"] == 64);
}
