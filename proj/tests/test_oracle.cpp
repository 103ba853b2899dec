#include <doctest.h>

#include <cmath>
#include <random>

#include "sqrtnfa/error.hpp"
#include "sqrtnfa/oracle.hpp"
#include "sqrtnfa/sqrt.hpp"
#include "sqrtnfa/witness.hpp"
#include "test_support.hpp"

using namespace sqrtnfa;
using namespace sqrtnfa::testing;

TEST_CASE("sqrt_member_direct") {
  const Nfa even = unary_cycle(2, {0});
  for (std::size_t k = 0; k < 10; ++k) CHECK(sqrt_member_direct(even, Word(k, 0)));

  const Nfa w6 = witness(6);
  TripleCodec codec(6);
  for (State i = 0; i < codec.size(); ++i) {
    const Triple x = codec.decode(i);
    REQUIRE(sqrt_member_direct(w6, witness_pair_word(x, x, 6)));
  }

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Nfa a = random_nfa(small_spec(seed));
    CHECK(sqrt_member_direct(a, {}) == member(a, {}));
  }
}

TEST_CASE("sqrt_dfa on unary languages") {
  SUBCASE("a*") {
    const Dfa root = sqrt_dfa(determinize(unary_cycle(1, {0})));
    CHECK(root.num_states() == 1);
    for (std::size_t k = 0; k < 6; ++k) CHECK(root.accepts(Word(k, 0)));
  }

  SUBCASE("(aaa)* is its own root") {
    const Dfa root = sqrt_dfa(determinize(unary_cycle(3, {0})));
    for (std::size_t k = 0; k <= 9; ++k) {
      // w w in (aaa)* iff 3 divides 2k iff 3 divides k.
      REQUIRE(root.accepts(Word(k, 0)) == (k % 3 == 0));
    }
    CHECK(equivalent(to_nfa(root), unary_cycle(3, {0})));
  }

  SUBCASE("root of {aa} is {a}") {
    const Dfa m = determinize(unary_single(2));
    CHECK(m.num_states() == 4);  // three live subsets and the empty sink
    const Dfa root = sqrt_dfa(m);
    CHECK(enumerate_words(to_nfa(root), 6) == std::vector<Word>{{0}});
  }

  CHECK_THROWS_AS(sqrt_dfa(determinize(unary_cycle(3, {0})), 2), BudgetError);
}

TEST_CASE("word actions compose") {
  std::mt19937_64 rng(41);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Dfa m = determinize(random_nfa(small_spec(seed)));
    for (int k = 0; k < 20; ++k) {
      const Word u = random_word(rng, m.num_letters(), 4);
      const Word v = random_word(rng, m.num_letters(), 4);
      const FnState fu = word_action(m, u);
      const FnState fv = word_action(m, v);
      FnState composed(fu.size());
      for (std::size_t q = 0; q < fu.size(); ++q) composed[q] = fv[fu[q]];
      REQUIRE(word_action(m, concat(u, v)) == composed);
    }
  }
}

TEST_CASE("sqrt_dfa state count is bounded by n^n") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Dfa m = determinize(random_nfa(small_spec(seed, 3, 2)));
    const Dfa root = sqrt_dfa(m);
    const double bound = std::pow(static_cast<double>(m.num_states()), static_cast<double>(m.num_states()));
    REQUIRE(static_cast<double>(root.num_states()) <= bound);
  }
}

TEST_CASE("three routes agree on random automata") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto failure = check_sqrt_routes(small_spec(seed), 5);
    REQUIRE_MESSAGE(!failure, "seed " << seed << ": " << (failure ? failure->reason : ""));
  }
}

TEST_CASE("random_nfa") {
  const auto spec = small_spec(12345);
  const Nfa a = random_nfa(spec);
  const Nfa b = random_nfa(spec);
  CHECK(a.num_states() == b.num_states());
  CHECK(a.initial() == b.initial());
  CHECK(a.final_states() == b.final_states());
  CHECK(a.transitions() == b.transitions());
  CHECK(a.alphabet() == std::vector<std::string>{"a", "b", "c"});

  SUBCASE("density 1 gives the complete relation") {
    auto full = small_spec(3);
    full.transition_density = 1.0;
    const Nfa c = random_nfa(full);
    const std::size_t n = c.num_states();
    CHECK(c.transitions().size() == n * n * 3);
  }

  SUBCASE("at least one initial state") {
    auto none = small_spec(0);
    none.initial_density = 0.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      none.seed = seed;
      REQUIRE(random_nfa(none).initial().size() == 1);
    }
  }

  SUBCASE("state counts cover the range") {
    std::set<std::size_t> sizes;
    for (std::uint64_t seed = 0; seed < 100; ++seed) sizes.insert(random_nfa(small_spec(seed)).num_states());
    CHECK(sizes == std::set<std::size_t>{1, 2, 3, 4});
  }

  SUBCASE("invalid specs") {
    auto bad = small_spec(0);
    bad.transition_density = 0.0;
    CHECK_THROWS_AS(random_nfa(bad), UsageError);
    bad = small_spec(0);
    bad.transition_density = 1.5;
    CHECK_THROWS_AS(random_nfa(bad), UsageError);
    bad = small_spec(0);
    bad.final_density = -0.1;
    CHECK_THROWS_AS(random_nfa(bad), UsageError);
    bad = small_spec(0);
    bad.max_states = 0;
    CHECK_THROWS_AS(random_nfa(bad), UsageError);
    bad = small_spec(0);
    bad.alphabet_size = 0;
    CHECK_THROWS_AS(random_nfa(bad), UsageError);
  }
}
