"""Recursive-descent parser for the ASCII formula and sequent syntax.

Grammar (implication is right associative, unary operators bind tightest,
quantifier scope extends maximally to the right):

    formula := or ('->' formula)?
    or      := and ('|' and)*
    and     := unary ('&' unary)*
    unary   := '~' unary | 'box' unary | 'dia' unary | 'E' VAR
             | 'forall' VAR '.' formula | 'exists' VAR '.' formula | atom
    atom    := 'false' | '(' formula ')' | IDENT '(' VAR (',' VAR)* ')'
             | IDENT '=' IDENT | IDENT
    sequent := vars? ';' formulas? '=>' sucitems?
    sucitem := formula | '[' sequent ']'

Sugar expands at parse time into the core connectives.  Identifiers starting
with '_' belong to the generated-name namespace; the parser accepts them so
that serialized objects round-trip, and rejects them in `strict` mode (used
for fresh user input, keeping the namespaces disjoint).
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from . import formulas as fm
from .formulas import RESERVED_PREFIX, Var
from .sequents import NestedSequent, nseq


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos}: ...{text[pos:pos + 20]!r}")
        self.pos = pos


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<arrow>->)|(?P<seq>=>)|(?P<sym>[()\[\],;=~&|.])|"
    r"(?P<ident>[A-Za-z_][A-Za-z0-9_']*))"
)

_KEYWORDS = {"false", "forall", "exists", "box", "dia", "E"}


@dataclass
class _Tok:
    kind: str
    value: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    out, i = [], 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if not m or m.end() == i:
            if text[i:].strip():
                raise ParseError("unexpected character", i, text)
            break
        i = m.end()
        if m.group("arrow"):
            out.append(_Tok("->", "->", m.start()))
        elif m.group("seq"):
            out.append(_Tok("=>", "=>", m.start()))
        elif m.group("sym"):
            out.append(_Tok(m.group("sym"), m.group("sym"), m.start()))
        else:
            word = m.group("ident")
            kind = word if word in _KEYWORDS else "ident"
            out.append(_Tok(kind, word, m.start()))
    out.append(_Tok("eof", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, strict: bool = False):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.strict = strict

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str) -> _Tok:
        t = self.peek()
        if t.kind != kind:
            raise ParseError(f"expected {kind!r}, found {t.value!r}", t.pos, self.text)
        return self.next()

    def var(self) -> Var:
        t = self.expect("ident")
        if self.strict and t.value.startswith(RESERVED_PREFIX):
            raise ParseError("names starting with '_' are reserved", t.pos, self.text)
        return Var(t.value)

    # -- formulas -------------------------------------------------------

    def formula(self):
        left = self.disjunct()
        if self.peek().kind == "->":
            self.next()
            return fm.Implies(left, self.formula())
        return left

    def disjunct(self):
        out = self.conjunct()
        while self.peek().kind == "|":
            self.next()
            out = fm.disj(out, self.conjunct())
        return out

    def conjunct(self):
        out = self.unary()
        while self.peek().kind == "&":
            self.next()
            out = fm.conj(out, self.unary())
        return out

    def unary(self):
        t = self.peek()
        if t.kind == "~":
            self.next()
            return fm.neg(self.unary())
        if t.kind == "box":
            self.next()
            return fm.Box(self.unary())
        if t.kind == "dia":
            self.next()
            return fm.dia(self.unary())
        if t.kind == "E":
            self.next()
            return fm.existence(self.var())
        if t.kind in ("forall", "exists"):
            self.next()
            x = self.var()
            self.expect(".")
            body = self.formula()
            return fm.Forall(x, body) if t.kind == "forall" else fm.exists(x, body)
        return self.atom()

    def atom(self):
        t = self.peek()
        if t.kind == "false":
            self.next()
            return fm.BOT
        if t.kind == "(":
            self.next()
            out = self.formula()
            self.expect(")")
            return out
        if t.kind == "ident":
            name = self.next().value
            if self.peek().kind == "(":
                self.next()
                args = [self.var()]
                while self.peek().kind == ",":
                    self.next()
                    args.append(self.var())
                self.expect(")")
                return fm.Pred(name, tuple(args))
            if self.peek().kind == "=":
                self.next()
                if self.strict and name.startswith(RESERVED_PREFIX):
                    raise ParseError("names starting with '_' are reserved", t.pos, self.text)
                return fm.Eq(Var(name), self.var())
            return fm.Pred(name, ())
        raise ParseError(f"expected a formula, found {t.value!r}", t.pos, self.text)

    # -- nested sequents ------------------------------------------------

    def sequent(self) -> NestedSequent:
        sig = []
        if self.peek().kind == "ident":
            sig.append(self.var())
            while self.peek().kind == ",":
                self.next()
                sig.append(self.var())
        self.expect(";")
        ant = []
        if self.peek().kind not in ("=>", "eof"):
            ant.append(self.formula())
            while self.peek().kind == ",":
                self.next()
                ant.append(self.formula())
        self.expect("=>")
        suc, children = [], []
        while True:
            t = self.peek()
            if t.kind == ",":
                self.next()  # tolerate leading / repeated separators
                continue
            if t.kind == "[":
                self.next()
                children.append(self.sequent())
                self.expect("]")
                continue
            if t.kind in ("eof", "]"):
                break
            suc.append(self.formula())
        return nseq(sig, ant, suc, children)


def parse_formula(text: str, strict: bool = False):
    p = _Parser(text, strict)
    out = p.formula()
    p.expect("eof")
    return out


def parse_nested_sequent(text: str, strict: bool = False) -> NestedSequent:
    p = _Parser(text, strict)
    out = p.sequent()
    p.expect("eof")
    return out
