#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "weylbn/cosets.hpp"
#include "weylbn/rootsys.hpp"
#include "weylbn/titssys.hpp"

namespace weylbn {

using Json = nlohmann::json;

struct CaseResult {
  std::string id;
  Json inputs;
  Json expected;
  Json actual;
  bool pass = false;
};

struct SuiteResult {
  std::string suite_id;
  std::vector<CaseResult> cases;
  std::int64_t wall_time_ms = 0;

  std::size_t total() const noexcept { return cases.size(); }
  std::size_t passed() const noexcept;
  std::size_t failed() const noexcept { return total() - passed(); }
  bool pass() const noexcept { return failed() == 0; }
  void add(std::string id, Json inputs, Json expected, Json actual, bool pass);
};

// --- serialization ---------------------------------------------------------

Json to_json(const DoubleCosetReport& r);
Json to_json(const WitnessReport& r);
Json to_json(const TitsReport& r);
Json to_json(const ClassificationFlags& f);
// wall_time_ms only with `timing`, so that output is byte-stable by default.
Json to_json(const SuiteResult& s, bool timing = false);
Json report_document(const std::vector<SuiteResult>& suites, bool timing = false);

// --- suites ----------------------------------------------------------------
// One per verification area. `families` empty means every family.

SuiteResult suite_lemma2(int max_rank = 8, const std::vector<Family>& families = {}, int jobs = 1);
// Orbit counts against full enumeration for every sweep type with |W| <= max_order.
SuiteResult suite_oracle(std::size_t max_order = 100'000);
SuiteResult suite_witness(int max_rank = 8, const std::vector<Family>& families = {});
SuiteResult suite_w0(int max_rank = 8, const std::vector<Family>& families = {});
SuiteResult suite_case1(int max_rank = 8, const std::vector<Family>& families = {});
SuiteResult suite_prop7(int max_m = 8);
SuiteResult suite_bn_standard();
SuiteResult suite_star_identity();
SuiteResult suite_coxeter();
SuiteResult suite_rank1();
SuiteResult suite_nonstandard();
SuiteResult suite_classifier();

// All checks on one candidate; `sl` = (n, p) adds the cell formula and
// Coxeter checks of a standard SL_n(F_p) system.
SuiteResult suite_bn(const TitsSystemCandidate& c, std::optional<std::pair<int, int>> sl = std::nullopt);

// Every suite above with default arguments, in canonical order. Suites run
// on up to `jobs` threads.
std::vector<SuiteResult> run_all(int jobs = 1);

}  // namespace weylbn
