#pragma once

#include <string>
#include <string_view>

#include "sqrtnfa/nfa.hpp"
#include "sqrtnfa/sqrt.hpp"

namespace sqrtnfa {

/// Smallest n for which the witness family is defined.
inline constexpr std::size_t kWitnessMinStates = 6;
/// Default refusal threshold; the alphabet has 2n^3 letters.
inline constexpr std::size_t kWitnessDefaultMaxStates = 32;

/// Initial states {0,1,2} and final states {3,4,5} of every witness.
inline constexpr bool witness_initial(State q) { return q <= 2; }
inline constexpr bool witness_final(State q) { return q >= 3 && q <= 5; }

/// Pivot into the initial block: 1 for p=0, 2 for p=1, 0 otherwise.
State pivot_l(State p, std::size_t n);
/// Pivot into the final block: 4 for p=3, 5 for p=4, 3 otherwise.
State pivot_m(State p, std::size_t n);

enum class LetterKind { A, B };

/// A letter a_X or b_X of the witness alphabet, X = (p, q, r).
struct WitnessLetter {
  LetterKind kind;
  Triple x;

  auto operator<=>(const WitnessLetter&) const = default;
};

/// "a[p,q,r]" or "b[p,q,r]".
std::string letter_name(const WitnessLetter& letter);
std::string letter_name(LetterKind kind, const Triple& x);

/// Inverse of letter_name. Throws ParseError (column = 1-based offset) on
/// malformed input and UsageError when a component is >= n.
WitnessLetter parse_letter(std::string_view name, std::size_t n);

/// Position of the letter in the canonical witness alphabet: the a-block in
/// lexicographic X order, then the b-block.
Letter witness_letter_index(const WitnessLetter& letter, std::size_t n);
Letter witness_letter_index(LetterKind kind, const Triple& x, std::size_t n);

/// The lower-bound witness on n states. On a_X: l(p) -> q and p -> r.
/// On b_X: q -> p and r -> m(p). Nothing else.
/// Throws DomainError for n < 6 or n > max_states.
Nfa witness(std::size_t n, std::size_t max_states = kWitnessDefaultMaxStates);

/// The word a_X b_Y (indices into the witness alphabet).
Word witness_pair_word(const Triple& x, const Triple& y, std::size_t n);

}  // namespace sqrtnfa
