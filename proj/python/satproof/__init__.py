"""Checking and transforming DRAT, LRAT and ER proofs."""

from ._satproof import (
    ForwardRejected,
    ParseError,
    SatproofError,
    check_drat,
    check_er,
    check_lrat,
    gen_php,
    gen_random,
    solve,
    to_er,
    trim,
)

__all__ = [
    "ForwardRejected",
    "ParseError",
    "SatproofError",
    "check_drat",
    "check_er",
    "check_lrat",
    "gen_php",
    "gen_random",
    "solve",
    "to_er",
    "trim",
]
