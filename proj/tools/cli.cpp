#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <ostream>

#include "sqrtnfa/error.hpp"
#include "sqrtnfa/fooling.hpp"
#include "sqrtnfa/format.hpp"
#include "sqrtnfa/nfa.hpp"
#include "sqrtnfa/oracle.hpp"
#include "sqrtnfa/proof_cases.hpp"
#include "sqrtnfa/report.hpp"
#include "sqrtnfa/sqrt.hpp"
#include "sqrtnfa/witness.hpp"

namespace sqrtnfa::cli {

namespace {

struct Options {
  // shared
  std::string in;
  std::string out = "-";
  std::string word;
  std::size_t n = 0;
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;
  // witness
  std::size_t max_n = kWitnessDefaultMaxStates;
  // sqrt
  bool no_labels = false;
  // check-fooling
  std::string pairs;
  std::string mode = "sqrt";
  // verify-cases
  std::string mutate;
  // random-equiv
  std::size_t trials = 500;
  std::size_t max_states = 4;
  std::size_t alphabet = 3;
  std::optional<std::uint64_t> seed;
  std::size_t max_len = 6;
  double density = 0.3;
  double initial_density = 0.3;
  double final_density = 0.3;
  // report
  std::string format = "both";
};

Budget effective_budget(const Options& opt) {
  Budget budget = Budget::from_env();
  if (opt.budget) budget.states = budget.pairs = budget.words = *opt.budget;
  return budget;
}

Nfa load(const std::string& path) { return parse_nfa(read_text(path)); }

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") out << text;
  else write_text(path, text);
}

int cmd_witness(const Options& opt, std::ostream& out) {
  emit(opt.out, emit_nfa(witness(opt.n, opt.max_n)), out);
  return kOk;
}

int cmd_sqrt(const Options& opt, std::ostream& out) {
  const Nfa a = load(opt.in);
  const Nfa b = sqrt_nfa(a, effective_budget(opt).states);
  emit(opt.out, emit_nfa(b, opt.no_labels ? std::vector<std::string>{} : triple_labels(a.num_states())), out);
  return kOk;
}

int cmd_member(const Options& opt, std::ostream& out, bool square_root) {
  const Nfa a = load(opt.in);
  const Word w = a.parse_word(opt.word);
  const bool accepted = square_root ? sqrt_member_direct(a, w) : member(a, w);
  out << (accepted ? "accept" : "reject") << "\n";
  return accepted ? kOk : kCheckFailed;
}

void print_fooling(const FoolingReport& report, const FoolingSet& set, const Nfa& a, std::ostream& out) {
  out << report.describe() << "\n";
  if (report.certified()) return;
  const auto& v = report.violation();
  const auto& [xi, yi] = set[v.i - 1];
  if (v.kind == ViolationKind::Cond1) {
    out << "x_i y_i = " << a.format_word(concat(xi, yi)) << "\n";
    return;
  }
  const auto& [xj, yj] = set[v.j - 1];
  out << "x_i y_j = " << a.format_word(concat(xi, yj)) << "\n";
  out << "x_j y_i = " << a.format_word(concat(xj, yi)) << "\n";
}

int cmd_check_fooling(const Options& opt, std::ostream& out) {
  const Budget budget = effective_budget(opt);
  const VerifyOptions verify{opt.threads};
  if (opt.n != 0) {
    if (!opt.in.empty() || !opt.pairs.empty()) throw UsageError("--n excludes --in/--pairs");
    auto report = certify_lower_bound(opt.n, budget, verify);
    print_fooling(report, witness_fooling_set(opt.n), witness(opt.n), out);
    return report.certified() ? kOk : kCheckFailed;
  }
  if (opt.in.empty() || opt.pairs.empty()) throw UsageError("need --n, or both --in and --pairs");
  const Nfa a = load(opt.in);
  const FoolingSet set = parse_pairs(read_text(opt.pairs), a);
  MembershipOracle oracle;
  if (opt.mode == "sqrt") oracle = square_root_oracle(a);
  else oracle = [&a](const Word& w) { return member(a, w); };
  auto report = verify_fooling(set, oracle, verify);
  print_fooling(report, set, a, out);
  return report.certified() ? kOk : kCheckFailed;
}

CaseTable parse_mutation(const std::string& spec) {
  CaseTable table = CaseTable::standard();
  if (spec.empty()) return table;
  if (spec == "identity-l") return table.with_identity_l();
  const std::string prefix = "drop-case=";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string digits = spec.substr(prefix.size());
    if (digits.size() == 1 && digits[0] >= '1' && digits[0] <= '7') return table.without_case(digits[0] - '0');
  }
  throw UsageError("unknown mutation '" + spec + "' (expected drop-case=K with K in 1..7, or identity-l)");
}

int cmd_verify_cases(const Options& opt, std::ostream& out) {
  const Budget budget = effective_budget(opt);
  const CaseTable table = parse_mutation(opt.mutate);
  const std::uint64_t pairs = std::uint64_t{opt.n} * opt.n * opt.n * opt.n * opt.n * opt.n;

  auto mismatch = verify_cases(opt.n, table, budget);
  if (mismatch) {
    const auto& [x1, x2] = *mismatch;
    auto a = witness(opt.n);
    const Word half = witness_pair_word(x1, x2, opt.n);
    out << "counterexample X1=" << x1.str() << " X2=" << x2.str() << ": simulation says "
        << (member(a, concat(half, half)) ? "accept" : "reject") << ", case table says "
        << (any_case(x1, x2, opt.n, table) ? "accept" : "reject") << "\n";
  } else {
    out << "case table agrees with simulation on all " << pairs << " pairs\n";
  }
  auto clash = pairwise_contradiction(opt.n, table, budget);
  if (clash) {
    out << "pairwise counterexample X3=" << clash->first.str() << " X4=" << clash->second.str()
        << ": both cross words satisfy a case\n";
  } else {
    out << "no distinct X3, X4 with both cross words satisfying a case\n";
  }
  return mismatch || clash ? kCheckFailed : kOk;
}

int cmd_random_equiv(const Options& opt, std::ostream& out) {
  if (!opt.seed) throw UsageError("random-equiv requires an explicit --seed");
  const Budget budget = effective_budget(opt);
  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    RandomSpec spec;
    spec.seed = *opt.seed + trial;
    spec.max_states = opt.max_states;
    spec.alphabet_size = opt.alphabet;
    spec.transition_density = opt.density;
    spec.initial_density = opt.initial_density;
    spec.final_density = opt.final_density;
    if (auto failure = check_sqrt_routes(spec, opt.max_len, budget)) {
      const Nfa a = random_nfa(spec);
      out << "FAIL seed=" << failure->seed << ": " << failure->reason << "\n";
      if (failure->word) out << "word: \"" << a.format_word(*failure->word) << "\"\n";
      out << emit_nfa(a);
      return kCheckFailed;
    }
  }
  out << "all " << opt.trials << " trials agree\n";
  return kOk;
}

int cmd_report(const Options& opt, std::ostream& out) {
  if (opt.format != "table" && opt.format != "kv" && opt.format != "both") {
    throw UsageError("--format must be table, kv or both");
  }
  const Report report = run_report(opt.n, effective_budget(opt), VerifyOptions{opt.threads});
  if (opt.format != "kv") out << report.table();
  if (opt.format == "both") out << "\n";
  if (opt.format != "table") out << report.key_values();
  return report.passed() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Square-root operation on NFAs: construction, witness family and fooling-set certificates",
               "sqrtnfa"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", opt.budget, "Cap on states/pairs/words (overrides SQRTNFA_BUDGET)")
        ->check(CLI::PositiveNumber);
  };

  auto* witness_cmd = app.add_subcommand("witness", "Write the n-state witness automaton");
  witness_cmd->add_option("--n", opt.n, "Number of states (>= 6)")->required();
  witness_cmd->add_option("--out", opt.out, "Output file, - for stdout");
  witness_cmd->add_option("--max-n", opt.max_n, "Refuse larger n (alphabet is 2n^3)");

  auto* sqrt_cmd = app.add_subcommand("sqrt", "Build the n^3-state square-root NFA");
  sqrt_cmd->add_option("--in", opt.in, "Input NFA, - for stdin")->required();
  sqrt_cmd->add_option("--out", opt.out, "Output file, - for stdout");
  sqrt_cmd->add_flag("--no-labels", opt.no_labels, "Omit the (p,q,r) state comments");
  add_budget(sqrt_cmd);

  auto* member_cmd = app.add_subcommand("member", "Test w in L(A)");
  auto* sqrt_member_cmd = app.add_subcommand("sqrt-member", "Test w w in L(A)");
  for (auto* sub : {member_cmd, sqrt_member_cmd}) {
    sub->add_option("--in", opt.in, "Input NFA, - for stdin")->required();
    sub->add_option("--word", opt.word, "Whitespace-separated letter names")->required();
  }

  auto* fooling_cmd = app.add_subcommand("check-fooling", "Verify a fooling set");
  fooling_cmd->add_option("--n", opt.n, "Check the witness fooling set for this n");
  fooling_cmd->add_option("--in", opt.in, "NFA defining L");
  fooling_cmd->add_option("--pairs", opt.pairs, "Pairs file: one 'x-letters ; y-letters' per line");
  fooling_cmd->add_option("--mode", opt.mode, "sqrt: language is the square root of L(A); plain: L(A)")
      ->check(CLI::IsMember({"sqrt", "plain"}));
  fooling_cmd->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
  add_budget(fooling_cmd);

  auto* cases_cmd = app.add_subcommand("verify-cases", "Check the seven-case table against simulation");
  cases_cmd->add_option("--n", opt.n, "Witness size (>= 6)")->required();
  cases_cmd->add_option("--mutate", opt.mutate, "Negative test: drop-case=K or identity-l");
  add_budget(cases_cmd);

  auto* random_cmd = app.add_subcommand("random-equiv", "Cross-check the three square-root routes");
  random_cmd->add_option("--trials", opt.trials, "Number of random automata");
  random_cmd->add_option("--max-states", opt.max_states, "States per automaton, at most")->check(CLI::PositiveNumber);
  random_cmd->add_option("--alphabet", opt.alphabet, "Letters per automaton")->check(CLI::PositiveNumber);
  random_cmd->add_option("--seed", opt.seed, "Base seed; trial i uses seed + i")->required();
  random_cmd->add_option("--max-len", opt.max_len, "Pointwise check over words up to this length");
  random_cmd->add_option("--density", opt.density, "Transition density in (0, 1]");
  random_cmd->add_option("--initial-density", opt.initial_density, "Initial-state density in [0, 1]");
  random_cmd->add_option("--final-density", opt.final_density, "Final-state density in [0, 1]");
  add_budget(random_cmd);

  auto* report_cmd = app.add_subcommand("report", "Run the whole pipeline for one n");
  report_cmd->add_option("--n", opt.n, "Witness size (>= 6)")->required();
  report_cmd->add_option("--format", opt.format, "table, kv or both");
  report_cmd->add_option("--threads", opt.threads, "Worker threads for the fooling check")
      ->check(CLI::PositiveNumber);
  add_budget(report_cmd);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (witness_cmd->parsed()) return cmd_witness(opt, out);
    if (sqrt_cmd->parsed()) return cmd_sqrt(opt, out);
    if (member_cmd->parsed()) return cmd_member(opt, out, false);
    if (sqrt_member_cmd->parsed()) return cmd_member(opt, out, true);
    if (fooling_cmd->parsed()) return cmd_check_fooling(opt, out);
    if (cases_cmd->parsed()) return cmd_verify_cases(opt, out);
    if (random_cmd->parsed()) return cmd_random_equiv(opt, out);
    if (report_cmd->parsed()) return cmd_report(opt, out);
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace sqrtnfa::cli
