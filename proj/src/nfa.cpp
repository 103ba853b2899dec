#include "sqrtnfa/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_set>

#include "sqrtnfa/error.hpp"

namespace sqrtnfa {

StateSet normalize(StateSet states) {
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  return states;
}

Word concat(const Word& u, const Word& v) {
  Word w;
  w.reserve(u.size() + v.size());
  w.insert(w.end(), u.begin(), u.end());
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

// ---------------------------------------------------------------------------
// Nfa

Nfa::Nfa(std::size_t n_states, std::vector<std::string> alphabet, StateSet initial,
         StateSet final_states, std::vector<Transition> transitions)
    : n_states_(n_states),
      alphabet_(std::move(alphabet)),
      initial_(normalize(std::move(initial))),
      final_(normalize(std::move(final_states))),
      transitions_(std::move(transitions)) {
  letter_index_.reserve(alphabet_.size());
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    const auto& name = alphabet_[i];
    if (name.empty()) throw UsageError("empty letter name at alphabet position " + std::to_string(i));
    for (char c : name) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#' || c == ';') {
        throw UsageError("letter name '" + name + "' contains a reserved character");
      }
    }
    if (!letter_index_.emplace(name, static_cast<Letter>(i)).second) {
      throw UsageError("duplicate letter name '" + name + "'");
    }
  }
  for (State q : initial_) check_state(q);
  for (State q : final_) check_state(q);
  final_mask_.assign(n_states_, 0);
  for (State q : final_) final_mask_[q] = 1;

  for (const auto& t : transitions_) {
    check_state(t.src);
    check_state(t.dst);
    check_letter(t.letter);
  }
  std::sort(transitions_.begin(), transitions_.end());
  auto dup = std::adjacent_find(transitions_.begin(), transitions_.end());
  if (dup != transitions_.end()) {
    throw UsageError("duplicate transition " + std::to_string(dup->src) + " " +
                     alphabet_[dup->letter] + " " + std::to_string(dup->dst));
  }

  // Counting sort into letter-major order; within a letter the (src, dst)
  // order of the sorted relation is preserved.
  letter_offsets_.assign(alphabet_.size() + 1, 0);
  for (const auto& t : transitions_) ++letter_offsets_[t.letter + 1];
  for (std::size_t a = 0; a < alphabet_.size(); ++a) letter_offsets_[a + 1] += letter_offsets_[a];
  edge_src_.resize(transitions_.size());
  edge_dst_.resize(transitions_.size());
  std::vector<std::size_t> cursor(letter_offsets_.begin(), letter_offsets_.end() - 1);
  for (const auto& t : transitions_) {
    auto slot = cursor[t.letter]++;
    edge_src_[slot] = t.src;
    edge_dst_[slot] = t.dst;
  }
}

std::span<const State> Nfa::successors(State q, Letter a) const {
  check_state(q);
  check_letter(a);
  auto first = edge_src_.begin() + static_cast<std::ptrdiff_t>(letter_offsets_[a]);
  auto last = edge_src_.begin() + static_cast<std::ptrdiff_t>(letter_offsets_[a + 1]);
  auto [lo, hi] = std::equal_range(first, last, q);
  auto offset = static_cast<std::size_t>(lo - edge_src_.begin());
  return {edge_dst_.data() + offset, static_cast<std::size_t>(hi - lo)};
}

std::span<const State> Nfa::letter_sources(Letter a) const {
  check_letter(a);
  return {edge_src_.data() + letter_offsets_[a], letter_offsets_[a + 1] - letter_offsets_[a]};
}

std::span<const State> Nfa::letter_targets(Letter a) const {
  check_letter(a);
  return {edge_dst_.data() + letter_offsets_[a], letter_offsets_[a + 1] - letter_offsets_[a]};
}

std::optional<Letter> Nfa::find_letter(std::string_view name) const {
  auto it = letter_index_.find(std::string(name));
  if (it == letter_index_.end()) return std::nullopt;
  return it->second;
}

Letter Nfa::letter(std::string_view name) const {
  if (auto a = find_letter(name)) return *a;
  throw UsageError("unknown letter '" + std::string(name) + "'");
}

Word Nfa::parse_word(std::string_view text) const {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) w.push_back(letter(token));
  return w;
}

std::string Nfa::format_word(const Word& w) const {
  check_word(w);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alphabet_[w[i]];
  }
  return out;
}

void Nfa::check_state(State q) const {
  if (q >= n_states_) {
    throw UsageError("state " + std::to_string(q) + " out of range (n_states " +
                     std::to_string(n_states_) + ")");
  }
}

void Nfa::check_letter(Letter a) const {
  if (a >= alphabet_.size()) {
    throw UsageError("letter index " + std::to_string(a) + " out of range (alphabet size " +
                     std::to_string(alphabet_.size()) + ")");
  }
}

void Nfa::check_word(const Word& w) const {
  for (Letter a : w) check_letter(a);
}

// ---------------------------------------------------------------------------
// Dfa

Dfa::Dfa(std::size_t n_states, std::vector<std::string> alphabet, State initial,
         std::vector<char> final_mask, std::vector<State> table)
    : n_states_(n_states),
      alphabet_(std::move(alphabet)),
      initial_(initial),
      final_mask_(std::move(final_mask)),
      table_(std::move(table)) {
  if (n_states_ == 0) throw UsageError("a complete DFA needs at least one state");
  if (initial_ >= n_states_) throw UsageError("DFA initial state out of range");
  if (final_mask_.size() != n_states_) throw UsageError("DFA final mask has wrong length");
  if (table_.size() != n_states_ * alphabet_.size()) {
    throw UsageError("DFA transition table is not complete");
  }
  for (State t : table_) {
    if (t >= n_states_) throw UsageError("DFA transition target out of range");
  }
}

State Dfa::run(State from, const Word& w) const {
  if (from >= n_states_) throw UsageError("DFA state out of range");
  State q = from;
  for (Letter a : w) {
    if (a >= alphabet_.size()) throw UsageError("letter index out of range");
    q = next(q, a);
  }
  return q;
}

// ---------------------------------------------------------------------------
// Simulation

StateSet step_set(const Nfa& a, const StateSet& states, Letter letter) {
  a.check_letter(letter);
  for (State q : states) a.check_state(q);
  StateSet out;
  auto src = a.letter_sources(letter);
  auto dst = a.letter_targets(letter);
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (std::binary_search(states.begin(), states.end(), src[i])) out.push_back(dst[i]);
  }
  return normalize(std::move(out));
}

StateSet reach(const Nfa& a, const StateSet& states, const Word& w) {
  for (State q : states) a.check_state(q);
  a.check_word(w);
  StateSet current = normalize(states);
  for (Letter letter : w) {
    if (current.empty()) break;
    current = step_set(a, current, letter);
  }
  return current;
}

bool member(const Nfa& a, const Word& w) {
  auto end = reach(a, a.initial(), w);
  return std::any_of(end.begin(), end.end(), [&](State q) { return a.is_final(q); });
}

// ---------------------------------------------------------------------------
// Determinization and equivalence

Dfa determinize(const Nfa& a, std::uint64_t max_states) {
  const std::size_t sigma = a.num_letters();
  std::map<StateSet, State> index;
  std::vector<StateSet> subsets;
  std::vector<State> table;

  auto intern = [&](StateSet s) -> State {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    if (subsets.size() >= max_states) {
      throw BudgetError("subset construction exceeded the state cap", max_states);
    }
    auto id = static_cast<State>(subsets.size());
    index.emplace(s, id);
    subsets.push_back(std::move(s));
    return id;
  };

  State start = intern(a.initial());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Letter letter = 0; letter < sigma; ++letter) {
      auto target = step_set(a, subsets[i], letter);
      table.push_back(intern(std::move(target)));
    }
  }

  std::vector<char> final_mask(subsets.size(), 0);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    final_mask[i] = std::any_of(subsets[i].begin(), subsets[i].end(),
                                [&](State q) { return a.is_final(q); });
  }
  return Dfa(subsets.size(), a.alphabet(), start, std::move(final_mask), std::move(table));
}

Nfa to_nfa(const Dfa& d) {
  std::vector<Transition> transitions;
  transitions.reserve(d.num_states() * d.num_letters());
  StateSet finals;
  for (State q = 0; q < d.num_states(); ++q) {
    if (d.is_final(q)) finals.push_back(q);
    for (Letter a = 0; a < d.num_letters(); ++a) transitions.push_back({q, a, d.next(q, a)});
  }
  return Nfa(d.num_states(), d.alphabet(), {d.initial()}, std::move(finals),
             std::move(transitions));
}

namespace {

// For each letter of `a`, the matching letter index in `b`.
std::vector<Letter> align_alphabets(const Nfa& a, const Nfa& b) {
  if (a.num_letters() != b.num_letters()) {
    throw UsageError("alphabet mismatch: sizes " + std::to_string(a.num_letters()) + " and " +
                     std::to_string(b.num_letters()));
  }
  std::vector<Letter> map(a.num_letters());
  for (Letter i = 0; i < a.num_letters(); ++i) {
    auto j = b.find_letter(a.alphabet()[i]);
    if (!j) throw UsageError("alphabet mismatch: letter '" + a.alphabet()[i] + "' missing");
    map[i] = *j;
  }
  return map;
}

}  // namespace

std::optional<Word> distinguishing_word(const Nfa& a, const Nfa& b, std::uint64_t max_states) {
  auto letter_map = align_alphabets(a, b);
  Dfa da = determinize(a, max_states);
  Dfa db = determinize(b, max_states);

  struct Node {
    State qa;
    State qb;
    std::size_t parent;
    Letter via;
  };
  constexpr auto kRoot = static_cast<std::size_t>(-1);
  auto key = [&](State x, State y) { return std::uint64_t{x} * db.num_states() + y; };

  std::vector<Node> nodes{{da.initial(), db.initial(), kRoot, 0}};
  std::unordered_set<std::uint64_t> seen{key(da.initial(), db.initial())};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node node = nodes[i];
    if (da.is_final(node.qa) != db.is_final(node.qb)) {
      Word w;
      for (std::size_t j = i; nodes[j].parent != kRoot; j = nodes[j].parent) w.push_back(nodes[j].via);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (Letter letter = 0; letter < a.num_letters(); ++letter) {
      State na = da.next(node.qa, letter);
      State nb = db.next(node.qb, letter_map[letter]);
      if (seen.insert(key(na, nb)).second) nodes.push_back({na, nb, i, letter});
    }
  }
  return std::nullopt;
}

bool equivalent(const Nfa& a, const Nfa& b, std::uint64_t max_states) {
  return !distinguishing_word(a, b, max_states).has_value();
}

namespace {

std::uint64_t count_words(std::size_t sigma, std::size_t max_len, std::uint64_t cap) {
  std::uint64_t total = 0;
  std::uint64_t level = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    total += level;
    if (total > cap) return cap + 1;
    if (sigma != 0 && level > cap / sigma) level = cap + 1;
    else level *= sigma;
    if (sigma == 0) break;
  }
  return total;
}

}  // namespace

std::optional<Word> bounded_equal(const Nfa& a, const Nfa& b, std::size_t k,
                                  std::uint64_t max_words) {
  auto letter_map = align_alphabets(a, b);
  if (count_words(a.num_letters(), k, max_words) > max_words) {
    throw BudgetError("bounded comparison would visit too many words", max_words);
  }
  auto accepts = [](const Nfa& m, const StateSet& s) {
    return std::any_of(s.begin(), s.end(), [&](State q) { return m.is_final(q); });
  };

  Word word;
  // Depth-first over words of exactly `len` letters, in lexicographic order.
  auto search = [&](auto&& self, std::size_t len, const StateSet& sa, const StateSet& sb) -> bool {
    if (word.size() == len) return accepts(a, sa) != accepts(b, sb);
    if (sa.empty() && sb.empty()) return false;
    for (Letter letter = 0; letter < a.num_letters(); ++letter) {
      word.push_back(letter);
      if (self(self, len, step_set(a, sa, letter), step_set(b, sb, letter_map[letter]))) return true;
      word.pop_back();
    }
    return false;
  };
  for (std::size_t len = 0; len <= k; ++len) {
    word.clear();
    if (search(search, len, a.initial(), b.initial())) return word;
  }
  return std::nullopt;
}

std::vector<Word> enumerate_words(const Nfa& a, std::size_t max_len, std::uint64_t max_words) {
  if (count_words(a.num_letters(), max_len, max_words) > max_words) {
    throw BudgetError("word enumeration exceeds the budget", max_words);
  }
  std::vector<Word> out;
  Word word;
  auto search = [&](auto&& self, std::size_t len, const StateSet& s) -> void {
    if (s.empty()) return;
    if (word.size() == len) {
      if (std::any_of(s.begin(), s.end(), [&](State q) { return a.is_final(q); })) out.push_back(word);
      return;
    }
    for (Letter letter = 0; letter < a.num_letters(); ++letter) {
      word.push_back(letter);
      self(self, len, step_set(a, s, letter));
      word.pop_back();
    }
  };
  for (std::size_t len = 0; len <= max_len; ++len) search(search, len, a.initial());
  return out;
}

std::vector<Word> all_words(std::size_t sigma, std::size_t max_len, std::uint64_t max_words) {
  if (count_words(sigma, max_len, max_words) > max_words) {
    throw BudgetError("word enumeration exceeds the budget", max_words);
  }
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len && sigma != 0; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Letter a = 0; a < sigma; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Housekeeping

Nfa trim(const Nfa& a) {
  const std::size_t n = a.num_states();
  std::vector<std::vector<State>> forward(n), backward(n);
  for (const auto& t : a.transitions()) {
    forward[t.src].push_back(t.dst);
    backward[t.dst].push_back(t.src);
  }
  auto closure = [n](const StateSet& seeds, const std::vector<std::vector<State>>& adj) {
    std::vector<char> mark(n, 0);
    std::deque<State> queue;
    for (State q : seeds) {
      if (!mark[q]) {
        mark[q] = 1;
        queue.push_back(q);
      }
    }
    while (!queue.empty()) {
      State q = queue.front();
      queue.pop_front();
      for (State r : adj[q]) {
        if (!mark[r]) {
          mark[r] = 1;
          queue.push_back(r);
        }
      }
    }
    return mark;
  };
  auto reachable = closure(a.initial(), forward);
  auto productive = closure(a.final_states(), backward);

  constexpr auto kGone = static_cast<State>(-1);
  std::vector<State> rename(n, kGone);
  State kept = 0;
  for (State q = 0; q < n; ++q) {
    if (reachable[q] && productive[q]) rename[q] = kept++;
  }
  if (kept == 0) return Nfa(1, a.alphabet(), {0}, {}, {});

  auto project = [&](const StateSet& s) {
    StateSet out;
    for (State q : s) {
      if (rename[q] != kGone) out.push_back(rename[q]);
    }
    return out;
  };
  std::vector<Transition> transitions;
  for (const auto& t : a.transitions()) {
    if (rename[t.src] != kGone && rename[t.dst] != kGone) {
      transitions.push_back({rename[t.src], t.letter, rename[t.dst]});
    }
  }
  return Nfa(kept, a.alphabet(), project(a.initial()), project(a.final_states()),
             std::move(transitions));
}

Nfa restrict_alphabet(const Nfa& a, const std::vector<std::string>& letters) {
  std::vector<Letter> new_index(a.num_letters(), static_cast<Letter>(-1));
  for (std::size_t i = 0; i < letters.size(); ++i) new_index[a.letter(letters[i])] = static_cast<Letter>(i);
  std::vector<Transition> transitions;
  for (const auto& t : a.transitions()) {
    if (new_index[t.letter] != static_cast<Letter>(-1)) {
      transitions.push_back({t.src, new_index[t.letter], t.dst});
    }
  }
  return Nfa(a.num_states(), letters, a.initial(), a.final_states(), std::move(transitions));
}

}  // namespace sqrtnfa
