#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

#include "sqrtnfa/error.hpp"
#include "sqrtnfa/fooling.hpp"
#include "sqrtnfa/format.hpp"
#include "sqrtnfa/nfa.hpp"
#include "sqrtnfa/oracle.hpp"
#include "sqrtnfa/proof_cases.hpp"
#include "sqrtnfa/report.hpp"
#include "sqrtnfa/sqrt.hpp"
#include "sqrtnfa/witness.hpp"

namespace py = pybind11;
using namespace sqrtnfa;

namespace {

using PyTriple = std::tuple<State, State, State>;

PyTriple to_py(const Triple& x) { return {x.p, x.q, x.r}; }
Triple from_py(const PyTriple& t) { return {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; }

// Words cross the boundary as either a list of letter indices or a string of
// whitespace-separated letter names.
Word to_word(const Nfa& a, const py::object& w) {
  if (py::isinstance<py::str>(w)) return a.parse_word(w.cast<std::string>());
  Word word = w.cast<Word>();
  a.check_word(word);
  return word;
}

py::object pair_or_none(const std::optional<TriplePair>& p) {
  if (!p) return py::none();
  return py::make_tuple(to_py(p->first), to_py(p->second));
}

CaseTable make_table(std::optional<int> drop_case, bool identity_l) {
  CaseTable table = CaseTable::standard();
  if (drop_case) table = table.without_case(*drop_case);
  if (identity_l) table = table.with_identity_l();
  return table;
}

}  // namespace

PYBIND11_MODULE(_sqrtnfa, m) {
  m.doc() = "Square-root operation on NFAs";

  static py::exception<Error> base_exc(m, "SqrtNfaError", PyExc_RuntimeError);
  static py::exception<BudgetError> budget_exc(m, "BudgetError", base_exc.ptr());
  static py::exception<ParseError> parse_exc(m, "ParseError", base_exc.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetError& e) {
      py::set_error(budget_exc, e.what());
    } catch (const ParseError& e) {
      py::set_error(parse_exc, e.what());
    } catch (const UsageError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const Error& e) {
      py::set_error(base_exc, e.what());
    }
  });

  py::class_<Nfa>(m, "Nfa")
      .def(py::init([](std::size_t n, std::vector<std::string> alphabet, StateSet initial, StateSet finals,
                       const std::vector<std::tuple<State, Letter, State>>& transitions) {
             std::vector<Transition> ts;
             for (const auto& [s, a, d] : transitions) ts.push_back({s, a, d});
             return Nfa(n, std::move(alphabet), std::move(initial), std::move(finals), std::move(ts));
           }),
           py::arg("n_states"), py::arg("alphabet"), py::arg("initial"), py::arg("final"),
           py::arg("transitions"))
      .def_property_readonly("num_states", &Nfa::num_states)
      .def_property_readonly("alphabet", &Nfa::alphabet)
      .def_property_readonly("initial", &Nfa::initial)
      .def_property_readonly("final_states", &Nfa::final_states)
      .def_property_readonly("transitions",
                             [](const Nfa& a) {
                               std::vector<std::tuple<State, Letter, State>> out;
                               for (const auto& t : a.transitions()) out.emplace_back(t.src, t.letter, t.dst);
                               return out;
                             })
      .def("letter", &Nfa::letter)
      .def("parse_word", &Nfa::parse_word)
      .def("format_word", &Nfa::format_word)
      .def("__repr__", [](const Nfa& a) {
        return "<Nfa states=" + std::to_string(a.num_states()) + " letters=" + std::to_string(a.num_letters()) +
               " transitions=" + std::to_string(a.transitions().size()) + ">";
      });

  m.def("parse_nfa", &parse_nfa, py::arg("text"));
  m.def("emit_nfa", [](const Nfa& a) { return emit_nfa(a); }, py::arg("nfa"));
  m.def("member", [](const Nfa& a, const py::object& w) { return member(a, to_word(a, w)); }, py::arg("nfa"),
        py::arg("word"));
  m.def("reach", [](const Nfa& a, StateSet s, const py::object& w) { return reach(a, normalize(s), to_word(a, w)); },
        py::arg("nfa"), py::arg("states"), py::arg("word"));
  m.def("sqrt_member_direct", [](const Nfa& a, const py::object& w) { return sqrt_member_direct(a, to_word(a, w)); },
        py::arg("nfa"), py::arg("word"));
  m.def("equivalent", [](const Nfa& a, const Nfa& b) { return equivalent(a, b); }, py::arg("a"), py::arg("b"));
  m.def("trim", &trim, py::arg("nfa"));
  m.def("sqrt_nfa", [](const Nfa& a, std::uint64_t budget) { return sqrt_nfa(a, budget); }, py::arg("nfa"),
        py::arg("budget") = Budget{}.states);

  m.def("witness", [](std::size_t n, std::size_t max_n) { return witness(n, max_n); }, py::arg("n"),
        py::arg("max_n") = kWitnessDefaultMaxStates);
  m.def("pivot_l", &pivot_l, py::arg("p"), py::arg("n"));
  m.def("pivot_m", &pivot_m, py::arg("p"), py::arg("n"));
  m.def("letter_name",
        [](const std::string& kind, const PyTriple& x) {
          if (kind != "a" && kind != "b") throw UsageError("kind must be 'a' or 'b'");
          return letter_name(kind == "a" ? LetterKind::A : LetterKind::B, from_py(x));
        },
        py::arg("kind"), py::arg("x"));
  m.def("parse_letter",
        [](const std::string& name, std::size_t n) {
          auto letter = parse_letter(name, n);
          return py::make_tuple(letter.kind == LetterKind::A ? "a" : "b", to_py(letter.x));
        },
        py::arg("name"), py::arg("n"));

  m.def("certify_lower_bound",
        [](std::size_t n) {
          auto report = certify_lower_bound(n, Budget::from_env());
          py::dict out;
          out["certified"] = report.certified();
          out["bound"] = report.certified() ? report.bound() : 0;
          out["verdict"] = report.describe();
          return out;
        },
        py::arg("n"));
  m.def("verify_cases",
        [](std::size_t n, std::optional<int> drop_case, bool identity_l) {
          return pair_or_none(verify_cases(n, make_table(drop_case, identity_l), Budget::from_env()));
        },
        py::arg("n"), py::arg("drop_case") = py::none(), py::arg("identity_l") = false);
  m.def("pairwise_contradiction",
        [](std::size_t n, std::optional<int> drop_case, bool identity_l) {
          return pair_or_none(pairwise_contradiction(n, make_table(drop_case, identity_l), Budget::from_env()));
        },
        py::arg("n"), py::arg("drop_case") = py::none(), py::arg("identity_l") = false);
  m.def("run_report",
        [](std::size_t n) {
          const Report r = run_report(n, Budget::from_env());
          py::dict out;
          out["n"] = r.n;
          out["upper_bound_states"] = r.upper_bound_states;
          out["certified_lower_bound"] = r.certified_lower_bound;
          out["previous_bound"] = r.previous_bound;
          out["fooling_verdict"] = r.fooling_verdict;
          out["case_check"] = r.case_check_passed();
          out["passed"] = r.passed();
          py::dict timings;
          for (const auto& [phase, ms] : r.timings) timings[py::str(phase)] = ms;
          out["timings_ms"] = timings;
          return out;
        },
        py::arg("n"));

  m.def("random_nfa",
        [](std::uint64_t seed, std::size_t max_states, std::size_t alphabet_size, double density,
           double initial_density, double final_density) {
          return random_nfa({seed, max_states, alphabet_size, density, initial_density, final_density});
        },
        py::arg("seed"), py::arg("max_states") = 4, py::arg("alphabet_size") = 2, py::arg("density") = 0.3,
        py::arg("initial_density") = 0.3, py::arg("final_density") = 0.3);
  m.def("check_sqrt_routes",
        [](std::uint64_t seed, std::size_t max_states, std::size_t alphabet_size, std::size_t max_len) -> py::object {
          RandomSpec spec;
          spec.seed = seed;
          spec.max_states = max_states;
          spec.alphabet_size = alphabet_size;
          auto failure = check_sqrt_routes(spec, max_len, Budget::from_env());
          if (!failure) return py::none();
          return py::str(failure->reason);
        },
        py::arg("seed"), py::arg("max_states") = 4, py::arg("alphabet_size") = 3, py::arg("max_len") = 6);
}
