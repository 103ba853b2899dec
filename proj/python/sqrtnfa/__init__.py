"""Square-root operation on NFAs: construction, witness family and fooling-set certificates."""

from ._sqrtnfa import (
    BudgetError,
    Nfa,
    ParseError,
    SqrtNfaError,
    certify_lower_bound,
    check_sqrt_routes,
    emit_nfa,
    equivalent,
    letter_name,
    member,
    pairwise_contradiction,
    parse_letter,
    parse_nfa,
    pivot_l,
    pivot_m,
    random_nfa,
    reach,
    run_report,
    sqrt_member_direct,
    sqrt_nfa,
    trim,
    verify_cases,
    witness,
)

__all__ = [
    "BudgetError",
    "Nfa",
    "ParseError",
    "SqrtNfaError",
    "certify_lower_bound",
    "check_sqrt_routes",
    "emit_nfa",
    "equivalent",
    "letter_name",
    "member",
    "pairwise_contradiction",
    "parse_letter",
    "parse_nfa",
    "pivot_l",
    "pivot_m",
    "random_nfa",
    "reach",
    "run_report",
    "sqrt_member_direct",
    "sqrt_nfa",
    "trim",
    "verify_cases",
    "witness",
]
