"""Deterministic concrete syntax for formulas, sequents and derivations.

Only core connectives are printed (sugar is parse-time only), so printing
then re-parsing always yields an alpha-equal object.  ASCII by default; the
unicode flag swaps in the usual symbols for display.
"""
from __future__ import annotations

from .formulas import Bottom, Box, Eq, Forall, Formula, Implies, Pred
from .sequents import NestedSequent

_LEVEL_IMP = 0  # also quantifiers: their scope extends maximally right
_LEVEL_UNARY = 3
_LEVEL_ATOM = 4


def format_formula(a: Formula, unicode: bool = False) -> str:
    arrow = " ⊃ " if unicode else " -> "
    box = "□" if unicode else "box "
    bot = "⊥" if unicode else "false"
    forall = "∀" if unicode else "forall "

    def go(f: Formula, min_level: int) -> str:
        match f:
            case Pred(name, args):
                s = name if not args else f"{name}({', '.join(v.name for v in args)})"
                lvl = _LEVEL_ATOM
            case Eq(l, r):
                s = f"{l.name} = {r.name}"
                lvl = _LEVEL_ATOM
            case Bottom():
                s = bot
                lvl = _LEVEL_ATOM
            case Implies(l, r):
                s = go(l, _LEVEL_IMP + 1) + arrow + go(r, _LEVEL_IMP)
                lvl = _LEVEL_IMP
            case Forall(x, body):
                s = f"{forall}{x.name}. " + go(body, _LEVEL_IMP)
                lvl = _LEVEL_IMP
            case Box(body):
                s = box + go(body, _LEVEL_UNARY)
                lvl = _LEVEL_UNARY
            case _:
                raise TypeError(f"not a formula: {f!r}")
        return f"({s})" if lvl < min_level else s

    return go(a, 0)


def format_nested_sequent(s: NestedSequent, unicode: bool = False) -> str:
    arrow = "⇒" if unicode else "=>"
    sig = ", ".join(v.name for v in s.sig)
    ant = ", ".join(format_formula(a, unicode) for a in s.ant)
    items = [format_formula(a, unicode) for a in s.suc]
    items += [f"[ {format_nested_sequent(c, unicode)} ]" for c in s.children]
    suc = ", ".join(items)
    left = (sig + " " if sig else "") + ";" + (" " + ant if ant else "")
    return left + f" {arrow}" + (" " + suc if suc else "")
