#include "sqrtnfa/fooling.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "sqrtnfa/error.hpp"
#include "sqrtnfa/witness.hpp"

namespace sqrtnfa {

FoolingSet::FoolingSet(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::set<Pair> seen;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (!seen.insert(pairs_[i]).second) {
      throw UsageError("fooling set repeats pair " + std::to_string(i + 1));
    }
  }
}

std::string FoolingReport::describe() const {
  if (certified()) return "Certified(" + std::to_string(bound()) + ")";
  const auto& v = violation();
  if (v.kind == ViolationKind::Cond1) {
    return "Violation(Cond1, i=" + std::to_string(v.i) + "): x_i y_i not in L";
  }
  return "Violation(Cond2, i=" + std::to_string(v.i) + ", j=" + std::to_string(v.j) +
         "): x_i y_j and x_j y_i both in L";
}

FoolingReport verify_fooling(const FoolingSet& set, const MembershipOracle& lang,
                             VerifyOptions options) {
  const std::size_t m = set.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!lang(concat(set[i].first, set[i].second))) {
      return {Violation{ViolationKind::Cond1, i + 1, 0}};
    }
  }

  // Returns the first bad (i, j) with i in [begin, end), or m if none.
  using Hit = std::pair<std::size_t, std::size_t>;
  const Hit none{m, m};
  auto scan = [&](std::size_t begin, std::size_t end, std::size_t stride) -> Hit {
    for (std::size_t i = begin; i < end; i += stride) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (lang(concat(set[i].first, set[j].second)) && lang(concat(set[j].first, set[i].second))) {
          return {i, j};
        }
      }
    }
    return none;
  };

  Hit first = none;
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || m < 2) {
    first = scan(0, m, 1);
  } else {
    // Rows are dealt round-robin; each worker stops at its own first hit and
    // the minimum over workers is the global first hit.
    std::vector<Hit> hits(threads, none);
    {
      std::vector<std::jthread> workers;
      for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] { hits[t] = scan(t, m, threads); });
      }
    }
    first = *std::min_element(hits.begin(), hits.end());
  }
  if (first != none) return {Violation{ViolationKind::Cond2, first.first + 1, first.second + 1}};
  return {Certified{m}};
}

FoolingSet witness_fooling_set(std::size_t n) {
  if (n < kWitnessMinStates) {
    throw DomainError("the witness fooling set is defined for n >= 6, got n = " + std::to_string(n));
  }
  TripleCodec codec(n);
  std::vector<FoolingSet::Pair> pairs;
  pairs.reserve(codec.size());
  for (State i = 0; i < codec.size(); ++i) {
    const Triple x = codec.decode(i);
    pairs.push_back({{witness_letter_index(LetterKind::A, x, n)},
                     {witness_letter_index(LetterKind::B, x, n)}});
  }
  return FoolingSet(std::move(pairs));
}

MembershipOracle square_root_oracle(const Nfa& a) {
  return [&a](const Word& w) { return member(a, concat(w, w)); };
}

FoolingReport certify_lower_bound(std::size_t n, const Budget& budget, VerifyOptions options) {
  if (n < kWitnessMinStates) {
    throw DomainError("the witness family is defined for n >= 6, got n = " + std::to_string(n));
  }
  const std::uint64_t cube = std::uint64_t{n} * n * n;
  if (cube > budget.states) {
    throw BudgetError("fooling set of " + std::to_string(cube) + " pairs", budget.states);
  }
  const Nfa a = witness(n);
  return verify_fooling(witness_fooling_set(n), square_root_oracle(a), options);
}

}  // namespace sqrtnfa
