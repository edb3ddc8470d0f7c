"""Sequents with signatures, nested sequents, contexts with holes, plugging.

A nested sequent is a tree of nodes ``X ; Gamma => Delta`` whose brackets are
kept in the succedent.  Signatures and both formula zones are multisets: the
stored tuples keep insertion order for printing, but equality and hashing go
through a canonical key that sorts multisets, sorts children and ignores the
names of bound variables.  Node paths (tuples of child indices) address the
tree; a context is a nested sequent together with hole paths in consequent
position.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

from .formulas import Formula, Var, alpha_key, canonical_formula, free_vars, bound_vars
from . import formulas

Path = tuple[int, ...]


def _multiset_key(keys):
    return tuple(sorted(keys))


@dataclass(frozen=True, eq=False)
class Sequent:
    sig: tuple[Var, ...] = ()
    ant: tuple[Formula, ...] = ()
    suc: tuple[Formula, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "sig", tuple(self.sig))
        object.__setattr__(self, "ant", tuple(self.ant))
        object.__setattr__(self, "suc", tuple(self.suc))

    def key(self):
        return (
            _multiset_key(v.name for v in self.sig),
            _multiset_key(alpha_key(a) for a in self.ant),
            _multiset_key(alpha_key(a) for a in self.suc),
        )

    def __eq__(self, other):
        return isinstance(other, Sequent) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


@dataclass(frozen=True, eq=False)
class NestedSequent:
    root: Sequent = field(default_factory=Sequent)
    children: tuple[NestedSequent, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))

    # Equality is per-node multiset equality, child reordering and bound
    # renaming: i.e. being an alphabetical variant.
    def key(self):
        cached = getattr(self, "_key", None)
        if cached is None:
            cached = self.root.key() + (_multiset_key(c.key() for c in self.children),)
            object.__setattr__(self, "_key", cached)
        return cached

    def __eq__(self, other):
        return isinstance(other, NestedSequent) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self) -> str:
        from .printer import format_nested_sequent

        return format_nested_sequent(self)

    @property
    def sig(self):
        return self.root.sig

    @property
    def ant(self):
        return self.root.ant

    @property
    def suc(self):
        return self.root.suc


def nseq(sig=(), ant=(), suc=(), children=()) -> NestedSequent:
    return NestedSequent(Sequent(tuple(sig), tuple(ant), tuple(suc)), tuple(children))


EMPTY = nseq()


def node_at(s: NestedSequent, path: Path) -> NestedSequent:
    for i in path:
        s = s.children[i]
    return s


def replace_node(s: NestedSequent, path: Path, new: NestedSequent) -> NestedSequent:
    if not path:
        return new
    i, rest = path[0], path[1:]
    kids = list(s.children)
    kids[i] = replace_node(kids[i], rest, new)
    return NestedSequent(s.root, tuple(kids))


def modify_node(s: NestedSequent, path: Path, fn) -> NestedSequent:
    return replace_node(s, path, fn(node_at(s, path)))


def all_paths(s: NestedSequent, prefix: Path = ()):
    yield prefix
    for i, c in enumerate(s.children):
        yield from all_paths(c, prefix + (i,))


def nseq_vars(s: NestedSequent) -> frozenset[Var]:
    out = set(s.sig)
    for a in s.ant + s.suc:
        out |= formulas.all_vars(a)
    for c in s.children:
        out |= nseq_vars(c)
    return frozenset(out)


def nseq_free_vars(s: NestedSequent) -> frozenset[Var]:
    out = set(s.sig)
    for a in s.ant + s.suc:
        out |= free_vars(a)
    for c in s.children:
        out |= nseq_free_vars(c)
    return frozenset(out)


def nseq_bound_vars(s: NestedSequent) -> frozenset[Var]:
    out = set()
    for a in s.ant + s.suc:
        out |= bound_vars(a)
    for c in s.children:
        out |= nseq_bound_vars(c)
    return frozenset(out)


def nseq_substitute(s: NestedSequent, y: Var, x: Var) -> NestedSequent:
    """Apply (y/x) component-wise to every signature and formula of the tree."""
    sub = lambda a: formulas.substitute(a, y, x)
    return NestedSequent(
        Sequent(
            tuple(y if v == x else v for v in s.sig),
            tuple(sub(a) for a in s.ant),
            tuple(sub(a) for a in s.suc),
        ),
        tuple(nseq_substitute(c, y, x) for c in s.children),
    )


def canonicalize(s: NestedSequent) -> NestedSequent:
    """Canonical representative: two nested sequents are alphabetical variants
    iff their canonical forms are structurally identical."""
    sig = tuple(sorted(s.sig, key=lambda v: v.name))
    ant = tuple(canonical_formula(a) for a in sorted(s.ant, key=alpha_key))
    suc = tuple(canonical_formula(a) for a in sorted(s.suc, key=alpha_key))
    kids = tuple(sorted((canonicalize(c) for c in s.children), key=lambda c: c.key()))
    return NestedSequent(Sequent(sig, ant, suc), kids)


def merge(a: NestedSequent, b: NestedSequent) -> NestedSequent:
    """Union the root contents of b into a and concatenate the child lists."""
    return NestedSequent(
        Sequent(a.sig + b.sig, a.ant + b.ant, a.suc + b.suc),
        a.children + b.children,
    )


@dataclass(frozen=True)
class Context:
    """A nested sequent with holes in consequent position, one per path entry.

    Several holes may address the same node.  Plugging merges the filler into
    the hole's node; plugging None (the empty filler) just drops the hole.
    """

    skeleton: NestedSequent
    holes: tuple[Path, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "holes", tuple(tuple(p) for p in self.holes))
        for p in self.holes:
            node_at(self.skeleton, p)  # must exist

    def hole_depth(self, i: int) -> int:
        return len(self.holes[i])


def hole_depth(c: Context, i: int) -> int:
    if not 0 <= i < len(c.holes):
        raise IndexError(f"hole index {i} out of range")
    return c.hole_depth(i)


def plug(c: Context, fillers) -> NestedSequent:
    """Substitute the fillers into the context's holes.

    Skeleton material keeps its positions (filler signatures, formulas and
    children are appended after it), so skeleton paths and multiset indices
    remain valid in the result.
    """
    fillers = list(fillers)
    if len(fillers) != len(c.holes):
        raise ValueError(
            f"context has {len(c.holes)} hole(s) but {len(fillers)} filler(s) given"
        )
    out = c.skeleton
    for path, filler in zip(c.holes, fillers):
        if filler is None:
            continue
        out = modify_node(out, path, lambda node, f=filler: merge(node, f))
    return out


def fm(s: NestedSequent) -> Formula:
    """The formula interpretation of a nested sequent.

    Existence atoms for the signature and the antecedent form one conjunction,
    the succedent forms a disjunction, and each child contributes a boxed
    disjunct.  The empty conjunction is top (false -> false), the empty
    disjunction is false.  Conjunctions and disjunctions fold to the right.
    """
    avoid = nseq_vars(s)
    parts = [formulas.existence(x, avoid) for x in s.sig] + list(s.ant)
    if parts:
        ante = parts[-1]
        for p in reversed(parts[:-1]):
            ante = formulas.conj(p, ante)
    else:
        ante = formulas.TOP
    if s.suc:
        cons = s.suc[-1]
        for q in reversed(s.suc[:-1]):
            cons = formulas.disj(q, cons)
    else:
        cons = formulas.BOT
    out = formulas.Implies(ante, cons)
    if s.children:
        boxes = [formulas.Box(fm(c)) for c in s.children]
        disj = boxes[-1]
        for b in reversed(boxes[:-1]):
            disj = formulas.disj(b, disj)
        out = formulas.disj(out, disj)
    return out


def node_map(a: NestedSequent, b: NestedSequent) -> dict[Path, Path]:
    """A path correspondence between two alphabetical variants.

    Children with equal canonical keys are matched in order; the map sends
    every path of `a` to a path of `b` whose subtree is a variant.
    """
    if a.key() != b.key():
        raise ValueError("node_map requires equal sequents up to canonicalize")
    out: dict[Path, Path] = {}

    def go(x: NestedSequent, y: NestedSequent, px: Path, py: Path):
        out[px] = py
        pool: dict = {}
        for j, cy in enumerate(y.children):
            pool.setdefault(cy.key(), []).append(j)
        for i, cx in enumerate(x.children):
            j = pool[cx.key()].pop(0)
            go(cx, y.children[j], px + (i,), py + (j,))

    go(a, b, (), ())
    return out
