"""Ordinals below epsilon_0 in Cantor normal form.

Only comparison is provided. Text syntax::

    0 | 7 | w | w*3 | w^2*3 + w + 4 | w^(w+1) | w^w^2

``w^w^2`` is read as ``w^(w^2)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import IntEnum

from .errors import NotNormalForm, ParseError

__all__ = ["OrdinalCNF", "Cmp", "ord_cmp", "parse_ordinal", "print_ordinal", "ZERO", "OMEGA", "nat"]


class Cmp(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True, repr=False)
class OrdinalCNF:
    """``sum(w^e * c for e, c in terms)`` with strictly decreasing exponents."""

    terms: tuple = ()
    _key: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        terms = tuple((e, c) for e, c in self.terms)
        object.__setattr__(self, "terms", terms)
        for e, c in terms:
            if not isinstance(e, OrdinalCNF):
                raise TypeError(f"exponent must be OrdinalCNF, got {type(e).__name__}")
            if not isinstance(c, int) or isinstance(c, bool) or c < 1:
                raise NotNormalForm(f"coefficient must be a positive integer, got {c!r}")
        # lexicographic comparison of these nested tuples is exactly CNF comparison
        key = tuple((e._key, c) for e, c in terms)
        for (a, _), (b, _) in zip(key, key[1:]):
            if not a > b:
                raise NotNormalForm("exponents must be strictly decreasing")
        object.__setattr__(self, "_key", key)

    def __lt__(self, other):
        if not isinstance(other, OrdinalCNF):
            return NotImplemented
        return self._key < other._key

    def __le__(self, other):
        if not isinstance(other, OrdinalCNF):
            return NotImplemented
        return self._key <= other._key

    def __gt__(self, other):
        if not isinstance(other, OrdinalCNF):
            return NotImplemented
        return self._key > other._key

    def __ge__(self, other):
        if not isinstance(other, OrdinalCNF):
            return NotImplemented
        return self._key >= other._key

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return print_ordinal(self)

    def __repr__(self):
        return f"OrdinalCNF({print_ordinal(self)!r})"

    @property
    def sort_key(self) -> tuple:
        return self._key

    @property
    def is_finite(self) -> bool:
        return all(not e for e, _ in self.terms)

    def as_int(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0


ZERO = OrdinalCNF()


def nat(k: int) -> OrdinalCNF:
    if k < 0:
        raise ValueError("ordinals are non-negative")
    return OrdinalCNF(((ZERO, k),)) if k else ZERO


ONE = nat(1)
OMEGA = OrdinalCNF(((ONE, 1),))


def ord_cmp(a: OrdinalCNF, b: OrdinalCNF) -> Cmp:
    """Three-way comparison, recursing on leading (exponent, coefficient) pairs."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = ord_cmp(ea, eb)
        if c != Cmp.EQ:
            return c
        if ca != cb:
            return Cmp.LT if ca < cb else Cmp.GT
    la, lb = len(a.terms), len(b.terms)
    if la == lb:
        return Cmp.EQ
    return Cmp.LT if la < lb else Cmp.GT


def print_ordinal(o: OrdinalCNF) -> str:
    if not o.terms:
        return "0"
    parts = []
    for e, c in o.terms:
        if not e:
            parts.append(str(c))
            continue
        s = "w" if e == ONE else "w^" + _print_exponent(e)
        parts.append(s if c == 1 else f"{s}*{c}")
    return " + ".join(parts)


def _print_exponent(e: OrdinalCNF) -> str:
    if e.is_finite or (len(e.terms) == 1 and e.terms[0][1] == 1):
        return print_ordinal(e)
    return "(" + print_ordinal(e) + ")"


_TOKEN = re.compile(r"\s*(?:(\d+)|(w)|([\^*+()]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise ParseError(f"bad ordinal syntax at {pos} in {self.text!r}")
            self.toks.append(m.group(m.lastindex))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'token'} in ordinal {self.text!r}, got {tok!r}")
        self.i += 1
        return tok

    def parse(self) -> OrdinalCNF:
        o = self.sum()
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r} in ordinal {self.text!r}")
        return o

    def sum(self) -> OrdinalCNF:
        terms = [self.term()]
        while self.peek() == "+":
            self.take("+")
            terms.append(self.term())
        if len(terms) == 1 and terms[0] is None:
            return ZERO
        if any(t is None for t in terms):
            raise NotNormalForm(f"zero summand in {self.text!r}")
        return OrdinalCNF(tuple(terms))

    def term(self):
        tok = self.peek()
        if tok is not None and tok.isdigit():
            k = int(self.take())
            return (ZERO, k) if k else None
        exp = self.power()
        coef = 1
        if self.peek() == "*":
            self.take("*")
            tok = self.take()
            if not tok.isdigit():
                raise ParseError(f"coefficient must be a natural in {self.text!r}")
            coef = int(tok)
            if coef == 0:
                raise NotNormalForm(f"zero coefficient in {self.text!r}")
        return (exp, coef)

    def power(self) -> OrdinalCNF:
        self.take("w")
        if self.peek() != "^":
            return ONE
        self.take("^")
        return self.primary()

    def primary(self) -> OrdinalCNF:
        tok = self.peek()
        if tok == "(":
            self.take("(")
            o = self.sum()
            self.take(")")
            return o
        if tok is not None and tok.isdigit():
            return nat(int(self.take()))
        if tok == "w":
            return OrdinalCNF(((self.power(), 1),))
        raise ParseError(f"bad exponent in ordinal {self.text!r}")


def parse_ordinal(text: str) -> OrdinalCNF:
    return _Parser(text).parse()
