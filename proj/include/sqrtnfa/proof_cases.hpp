#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>

#include "sqrtnfa/budget.hpp"
#include "sqrtnfa/sqrt.hpp"

namespace sqrtnfa {

/// Case number 1..7 of the acceptance analysis for a_{X1} b_{X2} a_{X1} b_{X2}.
/// With l1 = l(p1), m2 = m(p2), Q0 = {0,1,2}, F = {3,4,5}:
///   1) p1 = p2 in Q0,  r1 = r2 = q2
///   2) p1 in Q0,       p2 = l1, r1 = q2, q1 = r2
///   3) p1 = p2,        q1 = q2, r1 = r2
///   4) p1 = p2 in F,   r1 = q1 = q2
///   5) p2 = l1,        q1 = q2 = r2
///   6) p1 = m2,        q1 = r1 = r2
///   7) p1 = m2,        r1 = q2, q1 = r2, p2 in F
using CaseId = int;
inline constexpr CaseId kNumCases = 7;

using PivotFn = std::function<State(State p, std::size_t n)>;

/// The case predicates together with the pivots they are evaluated with.
/// Exists so that negative tests can weaken the table (drop a case, swap a pivot).
struct CaseTable {
  std::array<bool, kNumCases> enabled{true, true, true, true, true, true, true};
  PivotFn l;
  PivotFn m;

  /// All seven cases with the witness pivots.
  static CaseTable standard();
  CaseTable without_case(CaseId id) const;
  CaseTable with_identity_l() const;
};

bool case_holds(CaseId id, const Triple& x1, const Triple& x2, std::size_t n,
                const CaseTable& table = CaseTable::standard());

/// Lowest-numbered enabled case that holds.
std::optional<CaseId> any_case(const Triple& x1, const Triple& x2, std::size_t n,
                               const CaseTable& table = CaseTable::standard());

using TriplePair = std::pair<Triple, Triple>;

/// Compares, for every (X1, X2) in Q^3 x Q^3, simulated membership of
/// a_{X1} b_{X2} a_{X1} b_{X2} in witness(n) against any_case. Returns the
/// lexicographically first disagreement. Throws BudgetError when n^6 exceeds
/// budget.pairs.
std::optional<TriplePair> verify_cases(std::size_t n, const CaseTable& table = CaseTable::standard(),
                                       const Budget& budget = {});

/// Searches ordered pairs X3 != X4 for which both a_{X3} b_{X4} and
/// a_{X4} b_{X3} satisfy some case. Uses only the predicates, no automaton.
std::optional<TriplePair> pairwise_contradiction(std::size_t n,
                                                 const CaseTable& table = CaseTable::standard(),
                                                 const Budget& budget = {});

}  // namespace sqrtnfa
