#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqrtnfa/budget.hpp"
#include "sqrtnfa/nfa.hpp"

namespace sqrtnfa {

/// member(a, w w), computed by doubling the word.
bool sqrt_member_direct(const Nfa& a, const Word& w);

/// Total map Q_M -> Q_M over the states of a complete DFA: the action of a word.
using FnState = std::vector<State>;

/// Function automaton for the square root of L(m). States are the reachable
/// word actions, starting at the identity; reading `a` after f gives
/// delta_a . f. A state f accepts iff f(f(q0)) is final.
/// Throws BudgetError once more than `max_states` actions are reached.
Dfa sqrt_dfa(const Dfa& m, std::uint64_t max_states = Budget{}.states);

/// The action of `w` on the states of `m`.
FnState word_action(const Dfa& m, const Word& w);

/// Random NFA parameters. The generator is std::mt19937_64 seeded with
/// `seed`; every draw is the next raw 64-bit output mapped to [0, 1) as
/// (x >> 11) * 2^-53 (bernoulli: u < density) or to {0..k-1} as x % k.
/// Draw order (format version 1):
///   1. n_states = 1 + draw(max_states)
///   2. for q in 0..n-1: initial  (bernoulli initial_density)
///   3. for q in 0..n-1: final    (bernoulli final_density)
///   4. for src, letter, dst in nested order: edge (bernoulli transition_density)
///   5. if no initial state was drawn: initial = {draw(n_states)}
/// Letters are named "a", "b", "c", ... ("l<i>" beyond 26).
struct RandomSpec {
  std::uint64_t seed = 0;
  std::size_t max_states = 4;
  std::size_t alphabet_size = 2;
  double transition_density = 0.3;
  double initial_density = 0.3;
  double final_density = 0.3;

  /// Throws UsageError for empty ranges or densities outside their domain:
  /// transition density in (0, 1], the other two in [0, 1].
  void validate() const;
};

Nfa random_nfa(const RandomSpec& spec);

/// A disagreement found by check_sqrt_routes.
struct RouteFailure {
  std::uint64_t seed;
  std::string reason;
  /// The witnessing word, when the failure is tied to one.
  std::optional<Word> word;
};

/// Cross-checks the three square-root routes on random_nfa(spec):
/// exact equivalence of sqrt_nfa(A) with sqrt_dfa(determinize(A)), then
/// pointwise agreement of sqrt_member_direct, member on sqrt_nfa(A) and the
/// function DFA on every word of length <= max_len.
std::optional<RouteFailure> check_sqrt_routes(const RandomSpec& spec, std::size_t max_len,
                                              const Budget& budget = {});

/// Default letter names used by random_nfa.
std::vector<std::string> default_alphabet(std::size_t size);

}  // namespace sqrtnfa
