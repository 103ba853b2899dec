#include "sqrtnfa/sqrt.hpp"

#include <limits>

#include "sqrtnfa/error.hpp"

namespace sqrtnfa {

std::string Triple::str() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
}

TripleCodec::TripleCodec(std::size_t n) : n_(n) {
  if (n == 0) throw UsageError("triple codec needs n >= 1");
  if (size() > std::numeric_limits<State>::max()) {
    throw UsageError("n^3 does not fit a state index for n = " + std::to_string(n));
  }
}

State TripleCodec::encode(const Triple& x) const {
  if (x.p >= n_ || x.q >= n_ || x.r >= n_) {
    throw UsageError("triple " + x.str() + " out of range for n = " + std::to_string(n_));
  }
  return static_cast<State>((std::uint64_t{x.p} * n_ + x.q) * n_ + x.r);
}

Triple TripleCodec::decode(State index) const {
  if (index >= size()) throw UsageError("triple index " + std::to_string(index) + " out of range");
  const auto n = static_cast<State>(n_);
  return {index / (n * n), (index / n) % n, index % n};
}

namespace {

void check_budget(std::size_t n, std::uint64_t max_states) {
  const std::uint64_t cube = std::uint64_t{n} * n * n;
  if (cube > max_states) {
    throw BudgetError("square-root construction needs " + std::to_string(cube) + " states",
                      max_states);
  }
}

}  // namespace

Nfa sqrt_nfa(const Nfa& a, std::uint64_t max_states) {
  const std::size_t n = a.num_states();
  check_budget(n, max_states);
  TripleCodec codec(n);

  StateSet initial;
  StateSet finals;
  for (State p = 0; p < n; ++p) {
    for (State q0 : a.initial()) initial.push_back(codec.encode({p, q0, p}));
    for (State f : a.final_states()) finals.push_back(codec.encode({p, p, f}));
  }

  // Coordinates 2 and 3 each follow an edge of the same letter; p is frozen.
  std::vector<Transition> transitions;
  for (Letter letter = 0; letter < a.num_letters(); ++letter) {
    auto src = a.letter_sources(letter);
    auto dst = a.letter_targets(letter);
    for (State p = 0; p < n; ++p) {
      for (std::size_t i = 0; i < src.size(); ++i) {
        for (std::size_t j = 0; j < src.size(); ++j) {
          transitions.push_back({codec.encode({p, src[i], src[j]}), letter,
                                 codec.encode({p, dst[i], dst[j]})});
        }
      }
    }
  }
  return Nfa(codec.size(), a.alphabet(), std::move(initial), std::move(finals),
             std::move(transitions));
}

std::set<Triple> reachable_triples(const Nfa& a, const Word& w, std::uint64_t max_states) {
  const std::size_t n = a.num_states();
  check_budget(n, max_states);
  a.check_word(w);

  std::set<Triple> current;
  for (State p = 0; p < n; ++p) {
    for (State q0 : a.initial()) current.insert({p, q0, p});
  }
  for (Letter letter : w) {
    std::set<Triple> next;
    for (const auto& x : current) {
      for (State q2 : a.successors(x.q, letter)) {
        for (State r2 : a.successors(x.r, letter)) next.insert({x.p, q2, r2});
      }
    }
    current = std::move(next);
  }
  return current;
}

std::vector<std::string> triple_labels(std::size_t n) {
  TripleCodec codec(n);
  std::vector<std::string> labels;
  labels.reserve(codec.size());
  for (State i = 0; i < codec.size(); ++i) labels.push_back(codec.decode(i).str());
  return labels;
}

}  // namespace sqrtnfa
