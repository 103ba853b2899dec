#include "sqrtnfa/report.hpp"

#include <chrono>
#include <cstdio>

#include "sqrtnfa/error.hpp"
#include "sqrtnfa/sqrt.hpp"
#include "sqrtnfa/witness.hpp"

namespace sqrtnfa {

namespace {

std::string pair_str(const std::optional<TriplePair>& p) {
  if (!p) return "none";
  return p->first.str() + " " + p->second.str();
}

template <typename Fn>
auto timed(std::vector<std::pair<std::string, double>>& timings, const char* phase, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  auto result = fn();
  std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  timings.emplace_back(phase, elapsed.count());
  return result;
}

}  // namespace

std::uint64_t previous_lower_bound(std::size_t n) {
  if (n < 3) return 0;
  return std::uint64_t{n - 1} * (n - 2) * (n - 3);
}

Report run_report(std::size_t n, const Budget& budget, VerifyOptions options) {
  if (n < kWitnessMinStates) {
    throw DomainError("the witness family is defined for n >= 6, got n = " + std::to_string(n));
  }
  Report report;
  report.n = n;
  report.previous_bound = previous_lower_bound(n);

  const Nfa a = timed(report.timings, "witness", [&] { return witness(n); });
  const Nfa b = timed(report.timings, "sqrt_nfa", [&] { return sqrt_nfa(a, budget.states); });
  report.upper_bound_states = b.num_states();

  auto fooling = timed(report.timings, "certify", [&] { return certify_lower_bound(n, budget, options); });
  report.fooling_verdict = fooling.describe();
  report.certified_lower_bound = fooling.certified() ? fooling.bound() : 0;

  report.case_counterexample =
      timed(report.timings, "verify_cases", [&] { return verify_cases(n, CaseTable::standard(), budget); });
  report.pairwise_counterexample = timed(report.timings, "pairwise",
                                         [&] { return pairwise_contradiction(n, CaseTable::standard(), budget); });
  return report;
}

std::string Report::table() const {
  std::string out;
  auto row = [&](const std::string& key, const std::string& value) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "  %-32s %s\n", key.c_str(), value.c_str());
    out += buf;
  };
  out += "square-root NFA state complexity, n = " + std::to_string(n) + "\n";
  row("upper bound (n^3 states)", std::to_string(upper_bound_states));
  row("certified lower bound", std::to_string(certified_lower_bound));
  row("previous bound (n-1)(n-2)(n-3)", std::to_string(previous_bound));
  row("fooling set", fooling_verdict);
  row("case table vs simulation", case_counterexample ? "FAIL " + pair_str(case_counterexample) : "pass");
  row("pairwise contradiction", pairwise_counterexample ? "FAIL " + pair_str(pairwise_counterexample) : "pass");
  for (const auto& [phase, ms] : timings) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f ms", ms);
    row("time " + phase, buf);
  }
  row("status", passed() ? "PASS" : "FAIL");
  return out;
}

std::string Report::key_values() const {
  std::string out;
  auto kv = [&](const std::string& key, const std::string& value) { out += key + "=" + value + "\n"; };
  kv("n", std::to_string(n));
  kv("upper_bound_states", std::to_string(upper_bound_states));
  kv("certified_lower_bound", std::to_string(certified_lower_bound));
  kv("previous_bound", std::to_string(previous_bound));
  kv("fooling_verdict", fooling_verdict);
  kv("case_check", case_counterexample ? "fail" : "pass");
  kv("case_counterexample", pair_str(case_counterexample));
  kv("pairwise_check", pairwise_counterexample ? "fail" : "pass");
  kv("pairwise_counterexample", pair_str(pairwise_counterexample));
  kv("status", passed() ? "pass" : "fail");
  for (const auto& [phase, ms] : timings) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    kv("time_" + phase + "_ms", buf);
  }
  return out;
}

}  // namespace sqrtnfa
