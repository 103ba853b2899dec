#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sqrtnfa/budget.hpp"
#include "sqrtnfa/nfa.hpp"

namespace sqrtnfa {

/// Word -> "is it in L". Must be safe to call concurrently when the verifier
/// is given more than one thread.
using MembershipOracle = std::function<bool(const Word&)>;

/// Ordered list of pairwise distinct word pairs (x_i, y_i).
class FoolingSet {
 public:
  using Pair = std::pair<Word, Word>;

  FoolingSet() = default;
  /// Throws UsageError on a repeated pair.
  explicit FoolingSet(std::vector<Pair> pairs);

  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  const Pair& operator[](std::size_t i) const { return pairs_[i]; }

 private:
  std::vector<Pair> pairs_;
};

struct Certified {
  std::size_t bound;
  bool operator==(const Certified&) const = default;
};

enum class ViolationKind {
  /// x_i y_i is not in L.
  Cond1,
  /// Both x_i y_j and x_j y_i are in L.
  Cond2,
};

/// Indices are 1-based. For Cond1, j is 0.
struct Violation {
  ViolationKind kind;
  std::size_t i;
  std::size_t j;
  bool operator==(const Violation&) const = default;
};

struct FoolingReport {
  std::variant<Certified, Violation> verdict;

  bool certified() const { return std::holds_alternative<Certified>(verdict); }
  std::size_t bound() const { return std::get<Certified>(verdict).bound; }
  const Violation& violation() const { return std::get<Violation>(verdict); }
  std::string describe() const;
};

struct VerifyOptions {
  /// Worker threads for the condition-2 scan; 1 is sequential.
  unsigned threads = 1;
};

/// Checks both fooling-set conditions against `lang`. The first violation in
/// index order is reported: all of condition 1 first, then condition 2 over
/// i < j in lexicographic order.
FoolingReport verify_fooling(const FoolingSet& set, const MembershipOracle& lang,
                             VerifyOptions options = {});

/// The set {(a_X, b_X) | X in Q^3} over the witness alphabet, X in lexicographic order.
FoolingSet witness_fooling_set(std::size_t n);

/// w -> member(a, w w).
MembershipOracle square_root_oracle(const Nfa& a);

/// Verifies witness_fooling_set(n) against the square root of witness(n).
/// Expected to return Certified(n^3). Throws BudgetError when n^3 exceeds
/// budget.states.
FoolingReport certify_lower_bound(std::size_t n, const Budget& budget = {},
                                  VerifyOptions options = {});

}  // namespace sqrtnfa
