"""First-order modal formulas with identity.

The core grammar has predicates, identity atoms, falsum, implication, the
universal quantifier and the box.  Negation, conjunction, disjunction, the
existential quantifier, the diamond and the existence predicate are sugar and
expand eagerly into the core connectives (see the ``neg``/``conj``/... helpers
for the fixed expansion choices).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

# Namespace reserved for machine-generated names.  User input may not start
# with it (the parser rejects it), which keeps mechanical freshness checkable;
# the printer still emits such names so serialized objects round-trip.
RESERVED_PREFIX = "_"

_counter = itertools.count(1)


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


class Formula:
    """Base class; concrete formulas are the frozen dataclasses below."""

    __slots__ = ()

    def __str__(self) -> str:
        from .printer import format_formula

        return format_formula(self)


@dataclass(frozen=True)
class Pred(Formula):
    name: str
    args: tuple[Var, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if not all(isinstance(a, Var) for a in self.args):
            raise TypeError("predicate arguments must be variables")

    @property
    def arity(self) -> int:
        return len(self.args)


@dataclass(frozen=True)
class Eq(Formula):
    left: Var
    right: Var


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: Var
    body: Formula


@dataclass(frozen=True)
class Box(Formula):
    body: Formula


BOT = Bottom()
TOP = Implies(BOT, BOT)  # fixed encoding of the empty conjunction


def is_atomic(a: Formula) -> bool:
    """Atomic formulas are predicate and identity atoms (falsum is not one)."""
    return isinstance(a, (Pred, Eq))


def fresh_var(avoid=(), stem: str = "v") -> Var:
    """A variable not occurring in `avoid`, drawn from the reserved namespace.

    The underlying counter is monotone, so distinct calls never collide with
    each other even without an avoid set.
    """
    names = {v.name if isinstance(v, Var) else str(v) for v in avoid}
    while True:
        cand = f"{RESERVED_PREFIX}{stem}{next(_counter)}"
        if cand not in names:
            return Var(cand)


def free_vars(a: Formula) -> frozenset[Var]:
    match a:
        case Pred(_, args):
            return frozenset(args)
        case Eq(x, y):
            return frozenset((x, y))
        case Bottom():
            return frozenset()
        case Implies(l, r):
            return free_vars(l) | free_vars(r)
        case Forall(x, body):
            return free_vars(body) - {x}
        case Box(body):
            return free_vars(body)
    raise TypeError(f"not a formula: {a!r}")


def bound_vars(a: Formula) -> frozenset[Var]:
    match a:
        case Implies(l, r):
            return bound_vars(l) | bound_vars(r)
        case Forall(x, body):
            return bound_vars(body) | {x}
        case Box(body):
            return bound_vars(body)
        case _:
            return frozenset()


def all_vars(a: Formula) -> frozenset[Var]:
    return free_vars(a) | bound_vars(a)


def weight(a: Formula) -> int:
    match a:
        case Pred() | Eq() | Bottom():
            return 0
        case Implies(l, r):
            return weight(l) + weight(r) + 1
        case Forall(_, body) | Box(body):
            return weight(body) + 1
    raise TypeError(f"not a formula: {a!r}")


def substitute(a: Formula, y: Var, x: Var) -> Formula:
    """Replace every free occurrence of x by y, renaming binders on capture."""
    if x == y:
        return a
    match a:
        case Pred(name, args):
            return Pred(name, tuple(y if v == x else v for v in args))
        case Eq(l, r):
            return Eq(y if l == x else l, y if r == x else r)
        case Bottom():
            return a
        case Implies(l, r):
            return Implies(substitute(l, y, x), substitute(r, y, x))
        case Forall(z, body):
            if z == x or x not in free_vars(body):
                return a
            if z == y:
                z2 = fresh_var(all_vars(body) | {x, y})
                return Forall(z2, substitute(substitute(body, z2, z), y, x))
            return Forall(z, substitute(body, y, x))
        case Box(body):
            return Box(substitute(body, y, x))
    raise TypeError(f"not a formula: {a!r}")


def alpha_key(a: Formula, env=None):
    """Hashable, totally ordered key identifying a up to bound renaming.

    Free variables keep their names; binders are numbered by nesting depth.
    """
    if env is None:
        env = {}
    match a:
        case Pred(name, args):
            return ("pred", name, len(args), tuple(_var_key(v, env) for v in args))
        case Eq(l, r):
            return ("eq", _var_key(l, env), _var_key(r, env))
        case Bottom():
            return ("bot",)
        case Implies(l, r):
            return ("imp", alpha_key(l, env), alpha_key(r, env))
        case Forall(x, body):
            inner = dict(env)
            inner[x] = len(env)
            return ("all", alpha_key(body, inner))
        case Box(body):
            return ("box", alpha_key(body, env))
    raise TypeError(f"not a formula: {a!r}")


def _var_key(v: Var, env):
    if v in env:
        return ("b", env[v])
    return ("f", v.name)


def alpha_equal(a: Formula, b: Formula) -> bool:
    return alpha_key(a) == alpha_key(b)


def canonical_formula(a: Formula) -> Formula:
    """The canonical alphabetical variant: binders renamed positionally."""
    free_names = {v.name for v in free_vars(a)}
    counter = itertools.count()

    def pick(k: int) -> Var:
        name = f"{RESERVED_PREFIX}b{k}"
        while name in free_names:
            name += "_"
        return Var(name)

    def go(f: Formula, ren: dict[Var, Var]) -> Formula:
        match f:
            case Pred(name, args):
                return Pred(name, tuple(ren.get(v, v) for v in args))
            case Eq(l, r):
                return Eq(ren.get(l, l), ren.get(r, r))
            case Bottom():
                return f
            case Implies(l, r):
                return Implies(go(l, ren), go(r, ren))
            case Forall(x, body):
                nx = pick(next(counter))
                inner = dict(ren)
                inner[x] = nx
                return Forall(nx, go(body, inner))
            case Box(body):
                return Box(go(body, ren))
        raise TypeError(f"not a formula: {f!r}")

    return go(a, {})


# --- defined connectives (fixed expansions) ---------------------------------

def neg(a: Formula) -> Formula:
    """~A  :=  A -> false"""
    return Implies(a, BOT)


def disj(a: Formula, b: Formula) -> Formula:
    """A | B  :=  ~A -> B"""
    return Implies(neg(a), b)


def conj(a: Formula, b: Formula) -> Formula:
    """A & B  :=  ~(A -> ~B)"""
    return neg(Implies(a, neg(b)))


def exists(x: Var, a: Formula) -> Formula:
    """exists x. A  :=  ~forall x. ~A"""
    return neg(Forall(x, neg(a)))


def dia(a: Formula) -> Formula:
    """dia A  :=  ~box ~A"""
    return neg(Box(neg(a)))


def existence(x: Var, avoid=()) -> Formula:
    """E x  :=  exists y. y = x  with y fresh for x and `avoid`."""
    y = fresh_var(set(avoid) | {x})
    return exists(y, Eq(y, x))
