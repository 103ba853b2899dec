#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sqrtnfa/budget.hpp"
#include "sqrtnfa/nfa.hpp"

namespace sqrtnfa {

/// A point of Q x Q x Q.
struct Triple {
  State p;
  State q;
  State r;

  auto operator<=>(const Triple&) const = default;
  std::string str() const;
};

/// Row-major flattening of Q^3: encode(p, q, r) = p*n^2 + q*n + r.
class TripleCodec {
 public:
  explicit TripleCodec(std::size_t n);

  std::size_t base() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{n_} * n_ * n_; }

  State encode(const Triple& x) const;
  Triple decode(State index) const;

 private:
  std::size_t n_;
};

/// Square-root NFA on Q^3. State (p, q, r) guesses the midpoint p, runs the
/// first copy of the word on q from an initial state and the second copy on r
/// from p. Initial states are (p, q0, p), finals are (p, p, f). Every one of
/// the n^3 states is kept; call trim() separately if pruning is wanted.
/// Throws BudgetError when n^3 exceeds `max_states`.
Nfa sqrt_nfa(const Nfa& a, std::uint64_t max_states = Budget{}.states);

/// States of sqrt_nfa(a) reached from its initial set on `w`, decoded.
std::set<Triple> reachable_triples(const Nfa& a, const Word& w,
                                   std::uint64_t max_states = Budget{}.states);

/// Comment labels "(p,q,r)" for every state of sqrt_nfa(a), by index.
std::vector<std::string> triple_labels(std::size_t n);

}  // namespace sqrtnfa
