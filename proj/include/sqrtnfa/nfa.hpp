#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sqrtnfa/budget.hpp"

namespace sqrtnfa {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// Sorted, duplicate-free list of state indices.
using StateSet = std::vector<State>;
/// Sequence of letter indices; the empty vector is epsilon.
using Word = std::vector<Letter>;

struct Transition {
  State src;
  Letter letter;
  State dst;

  auto operator<=>(const Transition&) const = default;
};

/// Sorts and deduplicates in place.
StateSet normalize(StateSet states);

/// Immutable nondeterministic automaton over named letters, without epsilon moves.
///
/// A missing (state, letter) entry means the empty set of successors; there is
/// no implicit sink. Transitions are indexed per letter so that alphabets with
/// many sparsely used letters stay cheap.
class Nfa {
 public:
  Nfa(std::size_t n_states, std::vector<std::string> alphabet, StateSet initial,
      StateSet final_states, std::vector<Transition> transitions);

  std::size_t num_states() const noexcept { return n_states_; }
  std::size_t num_letters() const noexcept { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const StateSet& initial() const noexcept { return initial_; }
  const StateSet& final_states() const noexcept { return final_; }
  bool is_final(State q) const { return final_mask_.at(q) != 0; }

  /// All transitions, sorted by (src, letter, dst).
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }

  /// Targets of `q` on `a`, sorted ascending.
  std::span<const State> successors(State q, Letter a) const;

  /// Source/target pairs of every transition on `a`, sorted by (src, dst).
  std::span<const State> letter_sources(Letter a) const;
  std::span<const State> letter_targets(Letter a) const;

  std::optional<Letter> find_letter(std::string_view name) const;
  /// Like find_letter, but throws UsageError for unknown names.
  Letter letter(std::string_view name) const;

  /// Word from whitespace-separated letter names.
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;

  void check_state(State q) const;
  void check_letter(Letter a) const;
  void check_word(const Word& w) const;

 private:
  std::size_t n_states_;
  std::vector<std::string> alphabet_;
  std::unordered_map<std::string, Letter> letter_index_;
  StateSet initial_;
  StateSet final_;
  std::vector<char> final_mask_;
  std::vector<Transition> transitions_;
  // Letter-major copy of the relation: edges of letter a live in
  // [letter_offsets_[a], letter_offsets_[a + 1]), sorted by (src, dst).
  std::vector<std::size_t> letter_offsets_;
  std::vector<State> edge_src_;
  std::vector<State> edge_dst_;
};

/// Complete deterministic automaton. State 0 is not special; `initial()` names the start.
class Dfa {
 public:
  Dfa(std::size_t n_states, std::vector<std::string> alphabet, State initial,
      std::vector<char> final_mask, std::vector<State> table);

  std::size_t num_states() const noexcept { return n_states_; }
  std::size_t num_letters() const noexcept { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  State initial() const noexcept { return initial_; }
  bool is_final(State q) const { return final_mask_.at(q) != 0; }
  State next(State q, Letter a) const { return table_[q * alphabet_.size() + a]; }

  State run(State from, const Word& w) const;
  bool accepts(const Word& w) const { return is_final(run(initial_, w)); }

 private:
  std::size_t n_states_;
  std::vector<std::string> alphabet_;
  State initial_;
  std::vector<char> final_mask_;
  std::vector<State> table_;
};

/// Union of the successors of every state in `S` on `a`.
StateSet step_set(const Nfa& a, const StateSet& states, Letter letter);

/// Extended transition function lifted to sets; reach(A, S, epsilon) = S.
StateSet reach(const Nfa& a, const StateSet& states, const Word& w);

/// Acceptance from any initial state.
bool member(const Nfa& a, const Word& w);

/// Subset construction over reachable subsets. The empty subset, when reached,
/// is the sink. Throws BudgetError once more than `max_states` subsets appear.
Dfa determinize(const Nfa& a, std::uint64_t max_states = Budget{}.states);

/// The DFA viewed as an NFA with a single initial state.
Nfa to_nfa(const Dfa& d);

/// Shortest word (length-lexicographic in A's alphabet order) on which the two
/// languages differ, or nullopt when they are equal. Exact: both automata are
/// determinized and the product is explored breadth-first. B's alphabet must
/// contain the same names as A's, in any order.
std::optional<Word> distinguishing_word(const Nfa& a, const Nfa& b,
                                        std::uint64_t max_states = Budget{}.states);

bool equivalent(const Nfa& a, const Nfa& b, std::uint64_t max_states = Budget{}.states);

/// Brute-force comparison of every word of length <= k, in length-lexicographic
/// order. Returns the first word on which membership differs.
std::optional<Word> bounded_equal(const Nfa& a, const Nfa& b, std::size_t k,
                                  std::uint64_t max_words = Budget{}.words);

/// Drops states that are unreachable or cannot reach a final state. Surviving
/// states keep their relative order. An empty language yields one non-final
/// initial state with no transitions.
Nfa trim(const Nfa& a);

/// Every accepted word of length <= max_len, in length-lexicographic order.
std::vector<Word> enumerate_words(const Nfa& a, std::size_t max_len,
                                  std::uint64_t max_words = Budget{}.words);

/// Projection onto a sub-alphabet: keeps only the listed letters (in the given
/// order) and their transitions.
Nfa restrict_alphabet(const Nfa& a, const std::vector<std::string>& letters);

/// Every word over letters 0..sigma-1 of length <= max_len, length-lexicographic.
std::vector<Word> all_words(std::size_t sigma, std::size_t max_len,
                            std::uint64_t max_words = Budget{}.words);

/// Concatenation helper.
Word concat(const Word& u, const Word& v);

}  // namespace sqrtnfa
