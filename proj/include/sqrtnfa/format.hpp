#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sqrtnfa/fooling.hpp"
#include "sqrtnfa/nfa.hpp"

namespace sqrtnfa {

/// Reads the line-oriented NFA text format:
///
///     states <n>
///     alphabet <name1> <name2> ...
///     initial <i1> <i2> ...
///     final <f1> <f2> ...
///     trans <src> <letter-name> <dst>
///
/// `#` starts a comment. `states` comes first, `alphabet` before any `trans`;
/// `initial` and `final` are optional and default to empty. Errors carry the
/// 1-based line and column of the offending token.
Nfa parse_nfa(std::string_view text);

/// Canonical text: header lines in the order above, one `trans` line per
/// transition sorted by (src, letter, dst). When `state_labels` is non-empty it
/// must have one entry per state; each is written as a `# <index> <label>`
/// comment, which parse_nfa ignores.
std::string emit_nfa(const Nfa& a, const std::vector<std::string>& state_labels = {});

/// Pairs file: one `x-letters ; y-letters` pair per line, letter names
/// resolved against `a`. Either side may be empty (epsilon).
FoolingSet parse_pairs(std::string_view text, const Nfa& a);

/// Whole-file I/O; "-" is stdin/stdout.
std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view text);

}  // namespace sqrtnfa
