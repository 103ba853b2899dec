#include <doctest.h>

#include <random>

#include "sqrtnfa/error.hpp"
#include "sqrtnfa/nfa.hpp"
#include "sqrtnfa/oracle.hpp"
#include "sqrtnfa/witness.hpp"
#include "test_support.hpp"

using namespace sqrtnfa;
using namespace sqrtnfa::testing;

namespace {

Word wx(const Triple& x, std::size_t n) { return witness_pair_word(x, x, n); }

}  // namespace

TEST_CASE("Nfa rejects malformed input") {
  CHECK_THROWS_AS(Nfa(2, {"a"}, {2}, {}, {}), UsageError);
  CHECK_THROWS_AS(Nfa(2, {"a"}, {0}, {5}, {}), UsageError);
  CHECK_THROWS_AS(Nfa(2, {"a"}, {0}, {}, {{0, 1, 0}}), UsageError);
  CHECK_THROWS_AS(Nfa(2, {"a"}, {0}, {}, {{0, 0, 1}, {0, 0, 1}}), UsageError);
  CHECK_THROWS_AS(Nfa(2, {"a", "a"}, {0}, {}, {}), UsageError);
  CHECK_THROWS_AS(Nfa(2, {""}, {0}, {}, {}), UsageError);
}

TEST_CASE("step_set") {
  const Nfa w6 = witness(6);
  const Letter a024 = witness_letter_index(LetterKind::A, {0, 2, 4}, 6);

  // l(0) = 1 so 1 -> 2, and p = 0 -> r = 4.
  CHECK(step_set(w6, {0, 1}, a024) == StateSet{2, 4});
  CHECK(step_set(w6, {}, a024).empty());

  const Nfa partial(2, {"a", "b"}, {0}, {1}, {{0, 0, 1}});
  CHECK(step_set(partial, {0}, 1).empty());

  CHECK_THROWS_AS(step_set(partial, {0}, 2), UsageError);
  CHECK_THROWS_AS(step_set(partial, {3}, 0), UsageError);
}

TEST_CASE("reach") {
  const Nfa w6 = witness(6);
  const Word w = wx({2, 3, 5}, 6);

  SUBCASE("epsilon is identity") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
      auto s = random_subset(rng, 6);
      CHECK(reach(w6, s, {}) == s);
    }
  }

  SUBCASE("a_X b_X a_X b_X from 0 ends in 3") {
    const auto end = reach(w6, {0}, concat(w, w));
    CHECK(std::binary_search(end.begin(), end.end(), State{3}));
  }

  SUBCASE("composition law on random automata") {
    std::mt19937_64 rng(11);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const Nfa a = random_nfa(small_spec(seed));
      const auto s = random_subset(rng, a.num_states());
      const Word u = random_word(rng, a.num_letters(), 5);
      const Word v = random_word(rng, a.num_letters(), 5);
      REQUIRE(reach(a, s, concat(u, v)) == reach(a, reach(a, s, u), v));
    }
  }
}

TEST_CASE("member") {
  const Nfa w6 = witness(6);

  const Nfa both(1, {"a"}, {0}, {0}, {});
  const Nfa neither(2, {"a"}, {0}, {1}, {});
  CHECK(member(both, {}));
  CHECK_FALSE(member(neither, {}));

  const Word x = wx({2, 3, 5}, 6);
  CHECK(member(w6, concat(x, x)));
  CHECK(path_accepts(w6, concat(x, x)));

  const Word y = witness_pair_word({0, 1, 1}, {0, 2, 2}, 6);
  CHECK_FALSE(member(w6, concat(y, y)));
  CHECK_FALSE(path_accepts(w6, concat(y, y)));

  // Acceptance from any initial state, not only the smallest.
  const Nfa second_start(3, {"a"}, {0, 1}, {2}, {{1, 0, 2}});
  CHECK(member(second_start, {0}));
}

TEST_CASE("member agrees with a single-path oracle") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Nfa a = random_nfa(small_spec(seed));
    for (int k = 0; k < 20; ++k) {
      const Word w = random_word(rng, a.num_letters(), 6);
      REQUIRE(member(a, w) == path_accepts(a, w));
    }
  }
}

TEST_CASE("determinize") {
  SUBCASE("complete deterministic input keeps its reachable states") {
    const Nfa d(3, {"a", "b"}, {0}, {2},
                {{0, 0, 1}, {0, 1, 0}, {1, 0, 2}, {1, 1, 0}, {2, 0, 2}, {2, 1, 2}});
    CHECK(determinize(d).num_states() == 3);
  }

  SUBCASE("ends in a") {
    const Nfa a = ends_in_a();
    const Dfa d = determinize(a);
    CHECK(d.num_states() == 2);
    for (const auto& w : all_words(2, 8)) {
      const bool expected = !w.empty() && w.back() == 0;
      REQUIRE(d.accepts(w) == expected);
    }
  }

  SUBCASE("witness(6) under a small cap never yields a wrong language") {
    const Nfa w6 = witness(6);
    try {
      const Dfa d = determinize(w6, 1000);
      std::mt19937_64 rng(5);
      for (int i = 0; i < 2000; ++i) {
        const Word w = random_word(rng, w6.num_letters(), 4);
        REQUIRE(d.accepts(w) == member(w6, w));
      }
    } catch (const BudgetError& e) {
      CHECK(e.cap() == 1000);
      CHECK(std::string(e.what()).find("1000") != std::string::npos);
    }
  }

  SUBCASE("cap is enforced") {
    CHECK_THROWS_AS(determinize(ends_in_a(), 1), BudgetError);
  }

  SUBCASE("unreached empty subset is not added") {
    CHECK(determinize(unary_cycle(1, {0})).num_states() == 1);
  }
}

TEST_CASE("member agrees with the determinized automaton") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Nfa a = random_nfa(small_spec(1000 + seed));
    const Dfa d = determinize(a);
    for (const auto& w : all_words(a.num_letters(), 6)) REQUIRE(d.accepts(w) == member(a, w));
  }
}

TEST_CASE("equivalent and distinguishing_word") {
  const Nfa even = unary_cycle(2, {0});
  const Nfa all = unary_cycle(1, {0});

  CHECK(equivalent(even, even));
  CHECK(equivalent(all, all));
  CHECK_FALSE(equivalent(even, all));
  CHECK(distinguishing_word(even, all) == Word{0});

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Nfa a = random_nfa(small_spec(seed));
    REQUIRE(equivalent(a, a));
    REQUIRE(equivalent(a, trim(a)));
  }

  SUBCASE("alphabet is matched by name") {
    const Nfa ab(1, {"a", "b"}, {0}, {0}, {{0, 0, 0}});
    const Nfa ba(1, {"b", "a"}, {0}, {0}, {{0, 1, 0}});
    CHECK(equivalent(ab, ba));
    const Nfa other(1, {"a", "c"}, {0}, {0}, {{0, 0, 0}});
    CHECK_THROWS_AS(equivalent(ab, other), UsageError);
    CHECK_THROWS_AS(equivalent(ab, all), UsageError);
  }

  SUBCASE("cap overflow is an error, not a guess") {
    CHECK_THROWS_AS(equivalent(ends_in_a(), ends_in_a(), 1), BudgetError);
  }
}

TEST_CASE("bounded_equal") {
  const Nfa even = unary_cycle(2, {0});
  const Nfa all = unary_cycle(1, {0});

  CHECK_FALSE(bounded_equal(even, even, 5).has_value());
  CHECK(bounded_equal(even, all, 1) == Word{0});
  CHECK_FALSE(bounded_equal(even, all, 0).has_value());

  const Nfa nonempty(2, {"a"}, {0}, {1}, {{0, 0, 1}, {1, 0, 1}});
  CHECK(bounded_equal(all, nonempty, 0) == Word{});

  SUBCASE("equivalent implies no bounded counterexample") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Nfa a = random_nfa(small_spec(seed));
      const Nfa b = to_nfa(determinize(a));
      REQUIRE(equivalent(a, b));
      for (std::size_t k = 0; k <= 6; ++k) REQUIRE_FALSE(bounded_equal(a, b, k).has_value());
    }
  }

  SUBCASE("finds the same shortest word as the exact check") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Nfa a = random_nfa(small_spec(seed, 3, 2));
      const Nfa b = random_nfa(small_spec(seed + 5000, 3, 2));
      auto exact = distinguishing_word(a, b);
      auto bounded = bounded_equal(a, b, 8);
      if (exact && exact->size() <= 8) REQUIRE(bounded == exact);
      if (!exact) REQUIRE_FALSE(bounded.has_value());
    }
  }

  CHECK_FALSE(bounded_equal(even, even, 30, 1000).has_value());  // 31 unary words
  CHECK_THROWS_AS(bounded_equal(ends_in_a(), ends_in_a(), 30, 1000), BudgetError);
}

TEST_CASE("trim") {
  SUBCASE("isolated state is removed, order preserved") {
    const Nfa a(4, {"a"}, {0}, {3}, {{0, 0, 3}, {3, 0, 0}});
    const Nfa t = trim(a);
    CHECK(t.num_states() == 2);
    CHECK(t.initial() == StateSet{0});
    CHECK(t.final_states() == StateSet{1});
    CHECK(t.transitions() == std::vector<Transition>{{0, 0, 1}, {1, 0, 0}});
  }

  SUBCASE("idempotent") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const Nfa t = trim(random_nfa(small_spec(seed)));
      const Nfa tt = trim(t);
      REQUIRE(tt.num_states() == t.num_states());
      REQUIRE(tt.transitions() == t.transitions());
    }
  }

  SUBCASE("every witness state is useful") { CHECK(trim(witness(6)).num_states() == 6); }

  SUBCASE("empty language") {
    const Nfa a(3, {"a", "b"}, {0}, {}, {{0, 0, 1}});
    const Nfa t = trim(a);
    CHECK(t.num_states() == 1);
    CHECK(t.final_states().empty());
    CHECK(t.transitions().empty());
    CHECK(t.alphabet() == a.alphabet());
  }

  SUBCASE("preserves membership") {
    std::mt19937_64 rng(17);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const Nfa a = random_nfa(small_spec(seed));
      const Nfa t = trim(a);
      const Word w = random_word(rng, a.num_letters(), 6);
      REQUIRE(member(a, w) == member(t, w));
    }
  }
}

TEST_CASE("enumerate_words") {
  const Nfa empty(2, {"a", "b"}, {0}, {}, {{0, 0, 1}});
  CHECK(enumerate_words(empty, 4).empty());

  CHECK(enumerate_words(unary_single(2), 3) == std::vector<Word>{{0, 0}});

  SUBCASE("length-lexicographic order") {
    const auto words = enumerate_words(ends_in_a(), 2);
    CHECK(words == std::vector<Word>{{0}, {0, 0}, {1, 0}});
  }

  SUBCASE("witness restricted to a_X, b_X") {
    const Triple x{2, 3, 5};
    const Nfa w6 = witness(6);
    const Nfa sub = restrict_alphabet(w6, {letter_name(LetterKind::A, x), letter_name(LetterKind::B, x)});
    const auto words = enumerate_words(sub, 4);
    CHECK(std::find(words.begin(), words.end(), Word{0, 1, 0, 1}) != words.end());
  }

  CHECK_THROWS_AS(enumerate_words(ends_in_a(), 40), BudgetError);
}

TEST_CASE("all_words") {
  const auto words = all_words(2, 2);
  CHECK(words == std::vector<Word>{{}, {0}, {1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(all_words(3, 6).size() == 1093);
  CHECK(all_words(0, 4) == std::vector<Word>{{}});
}

TEST_CASE("words by name") {
  const Nfa a = ends_in_a();
  CHECK(a.parse_word("b a  a") == Word{1, 0, 0});
  CHECK(a.parse_word("") == Word{});
  CHECK(a.format_word({1, 0}) == "b a");
  CHECK_THROWS_AS(a.parse_word("a c"), UsageError);
}
