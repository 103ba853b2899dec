import os
import subprocess

import pytest

import sqrtnfa


def test_witness_shape():
    w = sqrtnfa.witness(6)
    assert w.num_states == 6
    assert len(w.alphabet) == 432
    assert w.initial == [0, 1, 2]
    assert w.final_states == [3, 4, 5]
    assert len(w.transitions) == 864


def test_sqrt_nfa_and_membership():
    w = sqrtnfa.witness(6)
    b = sqrtnfa.sqrt_nfa(w)
    assert b.num_states == 216
    half = "a[2,3,5] b[2,3,5]"
    assert sqrtnfa.member(b, half)
    assert sqrtnfa.sqrt_member_direct(w, half)
    assert sqrtnfa.member(w, half + " " + half)
    assert not sqrtnfa.sqrt_member_direct(w, "a[0,1,1] b[0,2,2]")
    ids = [w.letter("a[2,3,5]"), w.letter("b[2,3,5]")]
    assert sqrtnfa.member(b, ids)


def test_small_automaton_round_trip():
    a = sqrtnfa.Nfa(2, ["a", "b"], [0], [1], [(0, 0, 0), (0, 0, 1), (0, 1, 0)])
    text = sqrtnfa.emit_nfa(a)
    assert sqrtnfa.emit_nfa(sqrtnfa.parse_nfa(text)) == text
    assert sqrtnfa.equivalent(a, sqrtnfa.parse_nfa(text))
    assert sqrtnfa.reach(a, [0], "b a") == [0, 1]


def test_certificates():
    cert = sqrtnfa.certify_lower_bound(6)
    assert cert == {"certified": True, "bound": 216, "verdict": "Certified(216)"}
    assert sqrtnfa.verify_cases(6) is None
    assert sqrtnfa.pairwise_contradiction(6) is None
    x1, x2 = sqrtnfa.verify_cases(6, drop_case=3)
    assert len(x1) == 3 and len(x2) == 3
    assert sqrtnfa.pairwise_contradiction(6, identity_l=True) is not None


def test_report():
    r = sqrtnfa.run_report(6)
    assert r["upper_bound_states"] == 216
    assert r["certified_lower_bound"] == 216
    assert r["previous_bound"] == 60
    assert r["passed"]


def test_letters_and_pivots():
    assert sqrtnfa.letter_name("b", (5, 0, 3)) == "b[5,0,3]"
    assert sqrtnfa.parse_letter("a[0,2,4]", 6) == ("a", (0, 2, 4))
    assert sqrtnfa.pivot_l(0, 6) == 1
    assert sqrtnfa.pivot_m(4, 6) == 5


def test_random_routes_agree():
    for seed in range(20):
        assert sqrtnfa.check_sqrt_routes(seed, max_len=4) is None
    a = sqrtnfa.random_nfa(7, max_states=3, alphabet_size=2)
    assert a.alphabet == ["a", "b"]


def test_errors():
    with pytest.raises(ValueError):
        sqrtnfa.witness(5)
    with pytest.raises(sqrtnfa.ParseError):
        sqrtnfa.parse_nfa("states 2\nalphabet a\ntrans 0 b 1\n")
    with pytest.raises(sqrtnfa.BudgetError):
        sqrtnfa.sqrt_nfa(sqrtnfa.witness(6), budget=100)
    assert issubclass(sqrtnfa.BudgetError, sqrtnfa.SqrtNfaError)


@pytest.mark.skipif("SQRTNFA_CLI" not in os.environ, reason="command-line tool not located")
def test_cli_report():
    out = subprocess.run(
        [os.environ["SQRTNFA_CLI"], "report", "--n", "6", "--format", "kv"],
        capture_output=True, text=True, check=True,
    ).stdout
    assert "certified_lower_bound=216" in out
    bad = subprocess.run([os.environ["SQRTNFA_CLI"], "witness", "--n", "5"], capture_output=True)
    assert bad.returncode == 2
