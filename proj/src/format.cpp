#include "sqrtnfa/format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include "sqrtnfa/error.hpp"

namespace sqrtnfa {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

// Splits one line into whitespace-separated tokens, dropping any `#` comment.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    fn(line_no, text.substr(pos, end - pos));
    if (end == text.size()) break;
    pos = end + 1;
  }
}

std::uint64_t parse_count(const Token& tok, std::size_t line) {
  std::uint64_t value = 0;
  auto first = tok.text.data();
  auto last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, tok.column, "expected a non-negative integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace

Nfa parse_nfa(std::string_view text) {
  std::optional<std::size_t> n_states;
  std::optional<std::vector<std::string>> alphabet;
  std::unordered_map<std::string, Letter> letters;
  std::optional<StateSet> initial;
  std::optional<StateSet> finals;
  std::vector<Transition> transitions;
  std::set<Transition> seen;

  auto state_of = [&](const Token& tok, std::size_t line) -> State {
    auto value = parse_count(tok, line);
    if (value >= *n_states) {
      throw ParseError(line, tok.column, "state " + std::to_string(value) + " out of range (states " +
                                             std::to_string(*n_states) + ")");
    }
    return static_cast<State>(value);
  };
  auto state_list = [&](const std::vector<Token>& toks, std::size_t line) {
    StateSet out;
    std::set<State> dup;
    for (std::size_t k = 1; k < toks.size(); ++k) {
      State q = state_of(toks[k], line);
      if (!dup.insert(q).second) throw ParseError(line, toks[k].column, "duplicate state " + std::to_string(q));
      out.push_back(q);
    }
    return out;
  };

  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    auto toks = tokenize(raw);
    if (toks.empty()) return;
    const auto& head = toks[0];
    const std::string_view kw = head.text;
    if (kw != "states" && !n_states) throw ParseError(line, head.column, "expected 'states' first");

    if (kw == "states") {
      if (n_states) throw ParseError(line, head.column, "repeated 'states'");
      if (toks.size() != 2) throw ParseError(line, head.column, "'states' takes exactly one count");
      auto value = parse_count(toks[1], line);
      if (value > std::numeric_limits<State>::max()) throw ParseError(line, toks[1].column, "state count too large");
      n_states = static_cast<std::size_t>(value);
    } else if (kw == "alphabet") {
      if (alphabet) throw ParseError(line, head.column, "repeated 'alphabet'");
      alphabet.emplace();
      for (std::size_t k = 1; k < toks.size(); ++k) {
        std::string name(toks[k].text);
        if (name.find(';') != std::string::npos) {
          throw ParseError(line, toks[k].column, "letter names may not contain ';'");
        }
        if (!letters.emplace(name, static_cast<Letter>(alphabet->size())).second) {
          throw ParseError(line, toks[k].column, "duplicate letter '" + name + "'");
        }
        alphabet->push_back(std::move(name));
      }
    } else if (kw == "initial") {
      if (initial) throw ParseError(line, head.column, "repeated 'initial'");
      initial = state_list(toks, line);
    } else if (kw == "final") {
      if (finals) throw ParseError(line, head.column, "repeated 'final'");
      finals = state_list(toks, line);
    } else if (kw == "trans") {
      if (!alphabet) throw ParseError(line, head.column, "'trans' before 'alphabet'");
      if (toks.size() != 4) throw ParseError(line, head.column, "'trans' takes <src> <letter> <dst>");
      State src = state_of(toks[1], line);
      auto it = letters.find(std::string(toks[2].text));
      if (it == letters.end()) {
        throw ParseError(line, toks[2].column, "letter '" + std::string(toks[2].text) + "' is not in the alphabet");
      }
      State dst = state_of(toks[3], line);
      Transition t{src, it->second, dst};
      if (!seen.insert(t).second) throw ParseError(line, head.column, "duplicate transition");
      transitions.push_back(t);
    } else {
      throw ParseError(line, head.column, "unknown directive '" + std::string(kw) + "'");
    }
  });

  if (!n_states) throw ParseError(0, 0, "missing 'states' line");
  if (!alphabet) throw ParseError(0, 0, "missing 'alphabet' line");
  return Nfa(*n_states, std::move(*alphabet), initial.value_or(StateSet{}), finals.value_or(StateSet{}),
             std::move(transitions));
}

std::string emit_nfa(const Nfa& a, const std::vector<std::string>& state_labels) {
  if (!state_labels.empty() && state_labels.size() != a.num_states()) {
    throw UsageError("state label count does not match the automaton");
  }
  std::string out;
  out += "states " + std::to_string(a.num_states()) + "\n";
  out += "alphabet";
  for (const auto& name : a.alphabet()) out += " " + name;
  out += "\ninitial";
  for (State q : a.initial()) out += " " + std::to_string(q);
  out += "\nfinal";
  for (State q : a.final_states()) out += " " + std::to_string(q);
  out += "\n";
  for (std::size_t q = 0; q < state_labels.size(); ++q) {
    out += "# " + std::to_string(q) + " " + state_labels[q] + "\n";
  }
  for (const auto& t : a.transitions()) {
    out += "trans " + std::to_string(t.src) + " " + a.alphabet()[t.letter] + " " + std::to_string(t.dst) + "\n";
  }
  return out;
}

FoolingSet parse_pairs(std::string_view text, const Nfa& a) {
  std::vector<FoolingSet::Pair> pairs;
  std::set<FoolingSet::Pair> seen;
  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    auto body = raw.substr(0, std::min(raw.find('#'), raw.size()));
    if (tokenize(body).empty()) return;
    auto sep = body.find(';');
    if (sep == std::string_view::npos) throw ParseError(line, 1, "expected 'x-letters ; y-letters'");
    if (body.find(';', sep + 1) != std::string_view::npos) {
      throw ParseError(line, body.find(';', sep + 1) + 1, "more than one ';'");
    }
    auto side = [&](std::string_view part, std::size_t offset) {
      Word w;
      for (const auto& tok : tokenize(part)) {
        auto letter = a.find_letter(tok.text);
        if (!letter) {
          throw ParseError(line, offset + tok.column,
                           "letter '" + std::string(tok.text) + "' is not in the alphabet");
        }
        w.push_back(*letter);
      }
      return w;
    };
    Word x = side(body.substr(0, sep), 0);
    Word y = side(body.substr(sep + 1), sep + 1);
    FoolingSet::Pair pair{std::move(x), std::move(y)};
    if (!seen.insert(pair).second) throw ParseError(line, 1, "duplicate pair");
    pairs.push_back(std::move(pair));
  });
  return FoolingSet(std::move(pairs));
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, std::string_view text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw UsageError("failed writing '" + path + "'");
}

}  // namespace sqrtnfa
