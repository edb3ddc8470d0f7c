"""Nested sequent calculi for quantified modal logics.

A proof kernel (derivation checker), schema-level rule matching, admissible
structural transformations, syntactic cut elimination, bounded backward proof
search and finite Kripke countermodel search, for the family of calculi over
the axioms D, T, B, 4, 5, CBF, BF and UI.
"""
from .formulas import (
    BOT,
    TOP,
    Bottom,
    Box,
    Eq,
    Forall,
    Formula,
    Implies,
    Pred,
    Var,
    alpha_equal,
    canonical_formula,
    conj,
    dia,
    disj,
    exists,
    existence,
    free_vars,
    fresh_var,
    neg,
    substitute,
    weight,
)
from .sequents import (
    Context,
    NestedSequent,
    Sequent,
    canonicalize,
    fm,
    hole_depth,
    nseq,
    nseq_substitute,
    plug,
)
from .parser import ParseError, parse_formula, parse_nested_sequent
from .printer import format_formula, format_nested_sequent

__all__ = [name for name in dir() if not name.startswith("_")]
