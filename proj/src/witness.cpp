#include "sqrtnfa/witness.hpp"

#include <charconv>

#include "sqrtnfa/error.hpp"

namespace sqrtnfa {

namespace {

void check_pivot_args(State p, std::size_t n) {
  if (n < kWitnessMinStates) {
    throw DomainError("pivot functions need n >= 6, got " + std::to_string(n));
  }
  if (p >= n) throw UsageError("state " + std::to_string(p) + " out of range for n = " + std::to_string(n));
}

}  // namespace

State pivot_l(State p, std::size_t n) {
  check_pivot_args(p, n);
  switch (p) {
    case 0: return 1;
    case 1: return 2;
    default: return 0;
  }
}

State pivot_m(State p, std::size_t n) {
  check_pivot_args(p, n);
  switch (p) {
    case 3: return 4;
    case 4: return 5;
    default: return 3;
  }
}

std::string letter_name(LetterKind kind, const Triple& x) {
  return std::string(kind == LetterKind::A ? "a" : "b") + "[" + std::to_string(x.p) + "," +
         std::to_string(x.q) + "," + std::to_string(x.r) + "]";
}

std::string letter_name(const WitnessLetter& letter) { return letter_name(letter.kind, letter.x); }

WitnessLetter parse_letter(std::string_view name, std::size_t n) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& message) -> ParseError {
    return ParseError(0, pos + 1, message + " in letter '" + std::string(name) + "'");
  };
  auto expect = [&](char c) {
    if (pos >= name.size() || name[pos] != c) throw fail(std::string("expected '") + c + "'");
    ++pos;
  };
  auto number = [&]() -> State {
    State value = 0;
    auto [ptr, ec] = std::from_chars(name.data() + pos, name.data() + name.size(), value);
    if (ec != std::errc{}) throw fail("expected a state index");
    pos = static_cast<std::size_t>(ptr - name.data());
    return value;
  };

  WitnessLetter letter{};
  if (name.empty()) throw fail("expected 'a' or 'b'");
  if (name[0] == 'a') letter.kind = LetterKind::A;
  else if (name[0] == 'b') letter.kind = LetterKind::B;
  else throw fail("expected 'a' or 'b'");
  pos = 1;
  expect('[');
  letter.x.p = number();
  expect(',');
  letter.x.q = number();
  expect(',');
  letter.x.r = number();
  expect(']');
  if (pos != name.size()) throw fail("trailing characters");
  if (letter.x.p >= n || letter.x.q >= n || letter.x.r >= n) {
    throw UsageError("letter '" + std::string(name) + "' out of range for n = " + std::to_string(n));
  }
  return letter;
}

Letter witness_letter_index(LetterKind kind, const Triple& x, std::size_t n) {
  TripleCodec codec(n);
  const auto offset = kind == LetterKind::A ? 0 : static_cast<Letter>(codec.size());
  return offset + codec.encode(x);
}

Letter witness_letter_index(const WitnessLetter& letter, std::size_t n) {
  return witness_letter_index(letter.kind, letter.x, n);
}

Nfa witness(std::size_t n, std::size_t max_states) {
  if (n < kWitnessMinStates) {
    throw DomainError("the witness family is defined for n >= 6, got n = " + std::to_string(n));
  }
  if (n > max_states) {
    throw DomainError("witness with n = " + std::to_string(n) + " exceeds the configured limit " +
                      std::to_string(max_states) + " (alphabet grows as 2n^3)");
  }
  TripleCodec codec(n);
  const auto cube = static_cast<Letter>(codec.size());

  std::vector<std::string> alphabet(2 * std::size_t{cube});
  std::vector<Transition> transitions;
  transitions.reserve(4 * std::size_t{cube});
  for (State i = 0; i < cube; ++i) {
    const Triple x = codec.decode(i);
    const Letter a = i;
    const Letter b = cube + i;
    alphabet[a] = letter_name(LetterKind::A, x);
    alphabet[b] = letter_name(LetterKind::B, x);
    transitions.push_back({pivot_l(x.p, n), a, x.q});
    transitions.push_back({x.p, a, x.r});
    transitions.push_back({x.q, b, x.p});
    transitions.push_back({x.r, b, pivot_m(x.p, n)});
  }
  return Nfa(n, std::move(alphabet), {0, 1, 2}, {3, 4, 5}, std::move(transitions));
}

Word witness_pair_word(const Triple& x, const Triple& y, std::size_t n) {
  return {witness_letter_index(LetterKind::A, x, n), witness_letter_index(LetterKind::B, y, n)};
}

}  // namespace sqrtnfa
