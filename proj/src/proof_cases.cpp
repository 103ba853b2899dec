#include "sqrtnfa/proof_cases.hpp"

#include "sqrtnfa/error.hpp"
#include "sqrtnfa/witness.hpp"

namespace sqrtnfa {

CaseTable CaseTable::standard() {
  CaseTable table;
  table.l = [](State p, std::size_t n) { return pivot_l(p, n); };
  table.m = [](State p, std::size_t n) { return pivot_m(p, n); };
  return table;
}

CaseTable CaseTable::without_case(CaseId id) const {
  if (id < 1 || id > kNumCases) throw UsageError("case id must be in 1..7, got " + std::to_string(id));
  CaseTable copy = *this;
  copy.enabled[static_cast<std::size_t>(id - 1)] = false;
  return copy;
}

CaseTable CaseTable::with_identity_l() const {
  CaseTable copy = *this;
  copy.l = [](State p, std::size_t) { return p; };
  return copy;
}

namespace {

void check_args(const Triple& x1, const Triple& x2, std::size_t n) {
  if (n < kWitnessMinStates) throw DomainError("case analysis needs n >= 6, got " + std::to_string(n));
  TripleCodec codec(n);
  codec.encode(x1);
  codec.encode(x2);
}

bool holds(CaseId id, const Triple& x1, const Triple& x2, std::size_t n, const CaseTable& t) {
  const auto [p1, q1, r1] = x1;
  const auto [p2, q2, r2] = x2;
  switch (id) {
    case 1: return p1 == p2 && witness_initial(p1) && r1 == r2 && r2 == q2;
    case 2: return witness_initial(p1) && p2 == t.l(p1, n) && r1 == q2 && q1 == r2;
    case 3: return p1 == p2 && q1 == q2 && r1 == r2;
    case 4: return p1 == p2 && witness_final(p1) && r1 == q1 && q1 == q2;
    case 5: return p2 == t.l(p1, n) && q1 == q2 && q2 == r2;
    case 6: return p1 == t.m(p2, n) && q1 == r1 && r1 == r2;
    case 7: return p1 == t.m(p2, n) && r1 == q2 && q1 == r2 && witness_final(p2);
    default: throw UsageError("case id must be in 1..7, got " + std::to_string(id));
  }
}

void check_pair_budget(std::size_t n, const Budget& budget) {
  const std::uint64_t cube = std::uint64_t{n} * n * n;
  if (cube * cube > budget.pairs) {
    throw BudgetError("exhaustive scan over " + std::to_string(cube * cube) + " pairs", budget.pairs);
  }
}

}  // namespace

bool case_holds(CaseId id, const Triple& x1, const Triple& x2, std::size_t n, const CaseTable& table) {
  check_args(x1, x2, n);
  return holds(id, x1, x2, n, table);
}

std::optional<CaseId> any_case(const Triple& x1, const Triple& x2, std::size_t n,
                               const CaseTable& table) {
  check_args(x1, x2, n);
  for (CaseId id = 1; id <= kNumCases; ++id) {
    if (table.enabled[static_cast<std::size_t>(id - 1)] && holds(id, x1, x2, n, table)) return id;
  }
  return std::nullopt;
}

std::optional<TriplePair> verify_cases(std::size_t n, const CaseTable& table, const Budget& budget) {
  if (n < kWitnessMinStates) throw DomainError("case analysis needs n >= 6, got " + std::to_string(n));
  check_pair_budget(n, budget);
  const Nfa a = witness(n);
  TripleCodec codec(n);
  for (State i = 0; i < codec.size(); ++i) {
    const Triple x1 = codec.decode(i);
    for (State j = 0; j < codec.size(); ++j) {
      const Triple x2 = codec.decode(j);
      const Word half = witness_pair_word(x1, x2, n);
      const bool simulated = member(a, concat(half, half));
      const bool predicted = any_case(x1, x2, n, table).has_value();
      if (simulated != predicted) return TriplePair{x1, x2};
    }
  }
  return std::nullopt;
}

std::optional<TriplePair> pairwise_contradiction(std::size_t n, const CaseTable& table,
                                                 const Budget& budget) {
  if (n < kWitnessMinStates) throw DomainError("case analysis needs n >= 6, got " + std::to_string(n));
  check_pair_budget(n, budget);
  TripleCodec codec(n);
  for (State i = 0; i < codec.size(); ++i) {
    const Triple x3 = codec.decode(i);
    for (State j = 0; j < codec.size(); ++j) {
      if (i == j) continue;
      const Triple x4 = codec.decode(j);
      if (any_case(x3, x4, n, table) && any_case(x4, x3, n, table)) return TriplePair{x3, x4};
    }
  }
  return std::nullopt;
}

}  // namespace sqrtnfa
