#pragma once

#include <cstdint>

namespace sqrtnfa {

/// Resource caps shared by the constructions and exhaustive checks.
struct Budget {
  /// Max states of a constructed automaton (subset DFA, n^3 product, function DFA).
  std::uint64_t states = 1'000'000;
  /// Max (X1, X2) pairs scanned by exhaustive case checks.
  std::uint64_t pairs = 100'000'000;
  /// Max words visited by explicit enumeration.
  std::uint64_t words = 10'000'000;

  /// Defaults, with every cap replaced by SQRTNFA_BUDGET when that variable is set.
  static Budget from_env();
};

}  // namespace sqrtnfa
