#include "sqrtnfa/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#include "sqrtnfa/error.hpp"

namespace sqrtnfa {

Budget Budget::from_env() {
  Budget budget;
  const char* raw = std::getenv("SQRTNFA_BUDGET");
  if (raw == nullptr || *raw == '\0') return budget;
  std::uint64_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) {
    throw UsageError(std::string("SQRTNFA_BUDGET must be a positive integer, got '") + raw + "'");
  }
  budget.states = budget.pairs = budget.words = value;
  return budget;
}

}  // namespace sqrtnfa
