#include "sqrtnfa/oracle.hpp"

#include <map>
#include <random>

#include "sqrtnfa/error.hpp"
#include "sqrtnfa/sqrt.hpp"

namespace sqrtnfa {

bool sqrt_member_direct(const Nfa& a, const Word& w) { return member(a, concat(w, w)); }

FnState word_action(const Dfa& m, const Word& w) {
  FnState f(m.num_states());
  for (State q = 0; q < m.num_states(); ++q) f[q] = m.run(q, w);
  return f;
}

Dfa sqrt_dfa(const Dfa& m, std::uint64_t max_states) {
  const std::size_t n = m.num_states();
  const std::size_t sigma = m.num_letters();
  std::map<FnState, State> index;
  std::vector<FnState> states;
  std::vector<State> table;

  auto intern = [&](FnState f) -> State {
    auto it = index.find(f);
    if (it != index.end()) return it->second;
    if (states.size() >= max_states) {
      throw BudgetError("function automaton exceeded the state cap", max_states);
    }
    auto id = static_cast<State>(states.size());
    index.emplace(f, id);
    states.push_back(std::move(f));
    return id;
  };

  FnState identity(n);
  for (State q = 0; q < n; ++q) identity[q] = q;
  const State start = intern(std::move(identity));
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (Letter a = 0; a < sigma; ++a) {
      FnState g(n);
      for (State q = 0; q < n; ++q) g[q] = m.next(states[i][q], a);
      table.push_back(intern(std::move(g)));
    }
  }

  std::vector<char> final_mask(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& f = states[i];
    final_mask[i] = m.is_final(f[f[m.initial()]]);
  }
  return Dfa(states.size(), m.alphabet(), start, std::move(final_mask), std::move(table));
}

void RandomSpec::validate() const {
  if (max_states == 0) throw UsageError("random spec: max_states must be >= 1");
  if (alphabet_size == 0) throw UsageError("random spec: alphabet_size must be >= 1");
  if (!(transition_density > 0.0 && transition_density <= 1.0)) {
    throw UsageError("random spec: transition_density must be in (0, 1]");
  }
  if (!(initial_density >= 0.0 && initial_density <= 1.0)) {
    throw UsageError("random spec: initial_density must be in [0, 1]");
  }
  if (!(final_density >= 0.0 && final_density <= 1.0)) {
    throw UsageError("random spec: final_density must be in [0, 1]");
  }
}

std::vector<std::string> default_alphabet(std::size_t size) {
  std::vector<std::string> names;
  names.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "l" + std::to_string(i));
  }
  return names;
}

Nfa random_nfa(const RandomSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto bernoulli = [&](double p) { return uniform() < p; };
  auto below = [&](std::size_t k) { return static_cast<State>(rng() % k); };

  const std::size_t n = 1 + below(spec.max_states);
  StateSet initial;
  StateSet finals;
  for (State q = 0; q < n; ++q) {
    if (bernoulli(spec.initial_density)) initial.push_back(q);
  }
  for (State q = 0; q < n; ++q) {
    if (bernoulli(spec.final_density)) finals.push_back(q);
  }
  std::vector<Transition> transitions;
  for (State src = 0; src < n; ++src) {
    for (Letter a = 0; a < spec.alphabet_size; ++a) {
      for (State dst = 0; dst < n; ++dst) {
        if (bernoulli(spec.transition_density)) transitions.push_back({src, a, dst});
      }
    }
  }
  if (initial.empty()) initial.push_back(below(n));
  return Nfa(n, default_alphabet(spec.alphabet_size), std::move(initial), std::move(finals),
             std::move(transitions));
}

std::optional<RouteFailure> check_sqrt_routes(const RandomSpec& spec, std::size_t max_len,
                                              const Budget& budget) {
  const Nfa a = random_nfa(spec);
  const Nfa product = sqrt_nfa(a, budget.states);
  const Dfa functions = sqrt_dfa(determinize(a, budget.states), budget.states);

  if (auto w = distinguishing_word(product, to_nfa(functions), budget.states)) {
    return RouteFailure{spec.seed, "triple construction and function automaton differ", w};
  }
  for (const auto& w : all_words(a.num_letters(), max_len, budget.words)) {
    const bool direct = sqrt_member_direct(a, w);
    const bool via_product = member(product, w);
    const bool via_functions = functions.accepts(w);
    if (direct != via_product || direct != via_functions) {
      return RouteFailure{spec.seed,
                          "membership routes disagree (direct=" + std::to_string(direct) +
                              ", triple=" + std::to_string(via_product) +
                              ", function=" + std::to_string(via_functions) + ")",
                          w};
    }
  }
  return std::nullopt;
}

}  // namespace sqrtnfa
