"""Finite quasi-orders ``(Q, <=_Q)`` used as label sets.

A Q-file is line oriented::

    # comment
    ELEMS: bot 0 1
    LE: bot 0
    LE: bot 1

The reflexive-transitive closure of the declared pairs is computed on load.
Cycles are allowed (quasi-orders need not be antisymmetric).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ParseError, UnknownBuiltin, UnknownElement

__all__ = ["QuasiOrder", "load_quasi_order", "dump_quasi_order", "q_le", "builtin", "resolve"]


@dataclass(frozen=True)
class QuasiOrder:
    elements: tuple[str, ...]
    le: tuple[tuple[bool, ...], ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ParseError(f"duplicate element names in {self.elements!r}")
        if any(not e or any(c.isspace() for c in e) for e in self.elements):
            raise ParseError("element names must be non-empty and whitespace-free")
        n = len(self.elements)
        if len(self.le) != n or any(len(row) != n for row in self.le):
            raise ParseError("relation matrix does not match element count")
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.elements)})

    @classmethod
    def from_pairs(cls, elements: Sequence[str], pairs: Iterable[tuple[str, str]] = ()):
        """Build the reflexive-transitive closure of ``pairs`` over ``elements``."""
        elements = tuple(elements)
        index = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        m = [[i == j for j in range(n)] for i in range(n)]
        for a, b in pairs:
            for x in (a, b):
                if x not in index:
                    raise UnknownElement(f"unknown element {x!r}")
            m[index[a]][index[b]] = True
        # Warshall
        for k in range(n):
            for i in range(n):
                if m[i][k]:
                    row_k = m[k]
                    row_i = m[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        return cls(elements, tuple(tuple(r) for r in m))

    def index(self, a: str) -> int:
        try:
            return self._index[a]
        except KeyError:
            raise UnknownElement(f"unknown element {a!r}") from None

    def __contains__(self, a) -> bool:
        return a in self._index

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, a: str, b: str) -> bool:
        return self.le[self.index(a)][self.index(b)]

    def pairs(self):
        """Strict declared-style pairs ``(a, b)`` with ``a != b`` and ``a <= b``."""
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                if i != j and self.le[i][j]:
                    yield a, b


def q_le(Q: QuasiOrder, a: str, b: str) -> bool:
    return Q.leq(a, b)


def load_quasi_order(text: str) -> QuasiOrder:
    elements = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError(f"line {lineno}: expected 'KEY: ...', got {raw!r}")
        toks = rest.split()
        if elements is None:
            if key != "ELEMS":
                raise ParseError(f"line {lineno}: first line must be ELEMS:")
            if not toks:
                raise ParseError(f"line {lineno}: ELEMS needs at least one element")
            elements = toks
        elif key == "LE":
            if len(toks) != 2:
                raise ParseError(f"line {lineno}: LE takes exactly two elements")
            pairs.append((toks[0], toks[1]))
        else:
            raise ParseError(f"line {lineno}: unexpected key {key!r}")
    if elements is None:
        raise ParseError("missing ELEMS line")
    return QuasiOrder.from_pairs(elements, pairs)


def dump_quasi_order(Q: QuasiOrder) -> str:
    lines = ["ELEMS: " + " ".join(Q.elements)]
    lines += [f"LE: {a} {b}" for a, b in Q.pairs()]
    return "\n".join(lines) + "\n"


def builtin(name: str) -> QuasiOrder:
    """Named finite quasi-orders.

    ``antichain:k`` and ``chain:k`` use elements ``"0" .. "k-1"`` (the chain is
    ordered by index). ``flat3`` is ``bot < 0, bot < 1``; ``diamond`` is
    ``bot < a, b < top`` with ``a`` and ``b`` incomparable.
    """
    kind, _, arg = name.partition(":")
    if kind in ("antichain", "chain") and arg:
        try:
            k = int(arg)
        except ValueError:
            raise UnknownBuiltin(f"bad size in {name!r}") from None
        if k < 1:
            raise UnknownBuiltin(f"size must be >= 1 in {name!r}")
        elems = [str(i) for i in range(k)]
        pairs = [] if kind == "antichain" else [(elems[i], elems[i + 1]) for i in range(k - 1)]
        return QuasiOrder.from_pairs(elems, pairs)
    if name == "flat3":
        return QuasiOrder.from_pairs(["bot", "0", "1"], [("bot", "0"), ("bot", "1")])
    if name == "diamond":
        return QuasiOrder.from_pairs(
            ["bot", "a", "b", "top"],
            [("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")],
        )
    raise UnknownBuiltin(f"unknown builtin quasi-order {name!r}")


def resolve(spec: str) -> QuasiOrder:
    """Interpret ``spec`` as a builtin name, falling back to a Q-file path."""
    try:
        return builtin(spec)
    except UnknownBuiltin:
        pass
    try:
        with open(spec, encoding="utf-8") as fh:
            return load_quasi_order(fh.read())
    except FileNotFoundError:
        raise UnknownBuiltin(f"{spec!r} is neither a builtin nor a readable Q-file") from None
