#include <doctest.h>

#include "sqrtnfa/error.hpp"
#include "sqrtnfa/report.hpp"

using namespace sqrtnfa;

namespace {

std::string without_timings(const std::string& kv) {
  std::string out;
  std::size_t pos = 0;
  while (pos < kv.size()) {
    auto end = kv.find('\n', pos);
    auto line = kv.substr(pos, end - pos);
    if (line.rfind("time_", 0) != 0) out += line + "\n";
    pos = end + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("previous bound") {
  CHECK(previous_lower_bound(6) == 60);
  CHECK(previous_lower_bound(7) == 120);
  CHECK(previous_lower_bound(8) == 210);
}

TEST_CASE("run_report n = 6") {
  const Report r = run_report(6);
  CHECK(r.upper_bound_states == 216);
  CHECK(r.certified_lower_bound == 216);
  CHECK(r.previous_bound == 60);
  CHECK(r.fooling_verdict == "Certified(216)");
  CHECK(r.case_check_passed());
  CHECK(r.passed());
  CHECK(r.timings.size() == 5);

  const std::string kv = r.key_values();
  CHECK(kv.find("upper_bound_states=216\n") != std::string::npos);
  CHECK(kv.find("certified_lower_bound=216\n") != std::string::npos);
  CHECK(kv.find("previous_bound=60\n") != std::string::npos);
  CHECK(kv.find("case_check=pass\n") != std::string::npos);
  CHECK(kv.find("status=pass\n") != std::string::npos);
  CHECK(r.table().find("PASS") != std::string::npos);

  // Only timings may differ between runs.
  CHECK(without_timings(run_report(6).key_values()) == without_timings(kv));
}

TEST_CASE("run_report n = 7") {
  const Report r = run_report(7);
  CHECK(r.upper_bound_states == 343);
  CHECK(r.certified_lower_bound == 343);
  CHECK(r.previous_bound == 120);
  CHECK(r.passed());
}

TEST_CASE("run_report errors") {
  CHECK_THROWS_AS(run_report(5), DomainError);
  Budget tight;
  tight.states = 200;
  CHECK_THROWS_AS(run_report(6, tight), BudgetError);
}
