// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "weylbn/cosets.hpp"
#include "weylbn/suites.hpp"
#include "weylbn/titssys.hpp"

using namespace weylbn;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

void require_suite(Outcome& o, const SuiteResult& s) {
  for (const auto& c : s.cases)
    if (!c.pass) require(o, false, s.suite_id + " " + c.id);
  o.detail += (o.detail.empty() ? "" : "; ") + s.suite_id + " " + std::to_string(s.passed()) + "/" +
              std::to_string(s.total());
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::vector<std::size_t> sorted_cells(const TitsReport& r) {
  std::vector<std::size_t> v;
  for (const auto& c : r.cells) v.push_back(c.size);
  std::sort(v.begin(), v.end());
  return v;
}

Outcome criterion1() {
  Outcome o;
  const auto t = Clock::now();
  const SuiteResult s = suite_lemma2(8, {}, 1);
  const double secs = seconds_since(t);
  require_suite(o, s);
  require(o, s.total() == 200, "expected 200 (type, node) reports, got " + std::to_string(s.total()));
  bool e8_seen = false;
  for (const auto& c : s.cases) e8_seen |= c.id.rfind("E8/", 0) == 0;
  require(o, e8_seen, "no E8 nodes");
  require(o, secs <= 120.0, "runtime " + std::to_string(secs) + " s over budget");
  o.detail += "; " + std::to_string(static_cast<int>(secs * 1000)) + " ms single-threaded";
  return o;
}

Outcome criterion2() {
  Outcome o;
  require_suite(o, suite_oracle(100'000));
  return o;
}

Outcome criterion3() {
  Outcome o;
  require_suite(o, suite_witness(8));
  return o;
}

Outcome criterion4() {
  Outcome o;
  require_suite(o, suite_w0(8));
  return o;
}

Outcome criterion5() {
  Outcome o;
  require_suite(o, suite_case1(8));
  return o;
}

Outcome criterion6() {
  Outcome o;
  require_suite(o, suite_prop7(8));
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto t = Clock::now();
  require_suite(o, suite_bn_standard());
  const TitsReport sl32 = check_axioms(standard_sl_system(3, 2));
  require(o, sorted_cells(sl32) == std::vector<std::size_t>{8, 16, 16, 32, 32, 64}, "SL3(F2) cells");
  require(o, sl32.group_order == 168, "|SL3(F2)|");
  require(o, sl_order(4, 2) == 20160, "|SL4(F2)| formula");
  const double secs = seconds_since(t);
  require(o, secs <= 60.0, "runtime " + std::to_string(secs) + " s over budget");
  o.detail += "; " + std::to_string(static_cast<int>(secs * 1000)) + " ms";
  return o;
}

Outcome criterion8() {
  Outcome o;
  require_suite(o, suite_star_identity());
  return o;
}

Outcome criterion9() {
  Outcome o;
  require_suite(o, suite_coxeter());
  return o;
}

Outcome criterion10() {
  Outcome o;
  require_suite(o, suite_rank1());
  return o;
}

Outcome criterion11() {
  Outcome o;
  require_suite(o, suite_nonstandard());
  return o;
}

Outcome criterion12() {
  Outcome o;
  require_suite(o, suite_classifier());
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"double-coset sweep, count 2 exactly at type-A end nodes", criterion1},
      {"orbit counts equal enumeration for |W| <= 1e5", criterion2},
      {"reduced-word witness", criterion3},
      {"w0 = -1 classification and type-A negation", criterion4},
      {"root count bound when w0 = -1", criterion5},
      {"weight-set difference in type A", criterion6},
      {"standard SL systems: axioms and Bruhat cells", criterion7},
      {"(*) property and intersection identity", criterion8},
      {"Coxeter orders in W^T", criterion9},
      {"rank-one constructions", criterion10},
      {"order-21 system in PSL3(F2)", criterion11},
      {"classifier sanity", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << o.detail << ")" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
