"""Nested labeled-forest terms.

Four constructors cover every level of nesting:

* ``Atom(q)``: an element of Q (also the single-node tree labeled ``q``).
* ``Jump(alpha, body)``: the label ``<body>^(w^alpha)``; ``alpha = 0`` is the
  plain labeling ``<body>``.
* ``Cat(label, children)``: root ``label`` joined to the forest ``children``.
  An empty ``children`` tuple is the bare tree (joined to the empty forest).
* ``Sum(components)``: disjoint union of trees.

Text syntax (s-expressions plus sugar)::

    0 -> 1 -> 0                 right-associated chain of single children
    (sum 0 (0 -> 1))            forest
    (cat 0 1 (1 -> 0))          root 0 with three children
    (jump w^2 (0 -> 1))         bare jump
    <0 -> 1>                    (cat (jump 0 (0 -> 1)))
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .errors import BadLength, InvariantViolation, ParseError
from .ordinal import ZERO, OrdinalCNF, parse_ordinal, print_ordinal

__all__ = [
    "Term", "Atom", "Jump", "Cat", "Sum", "TermStats",
    "parse_term", "print_term", "iota", "stats", "chain", "relabel", "swap01",
    "atoms", "label_atom", "tree_view", "structural_key", "node_count", "is_tree", "bare",
]


class Term:
    """Base class; instances are immutable and hash in O(1)."""

    __slots__ = ()

    def __str__(self):
        return print_term(self)


def _init_hash(obj, *parts):
    object.__setattr__(obj, "_hash", hash((type(obj).__name__,) + parts))


@dataclass(frozen=True, eq=True, repr=True)
class Atom(Term):
    q: str
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.q, str) or not self.q:
            raise InvariantViolation("atom name must be a non-empty string")
        _init_hash(self, self.q)

    def __hash__(self):
        return self._hash


@dataclass(frozen=True, eq=True, repr=True)
class Jump(Term):
    alpha: OrdinalCNF
    body: Term
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.alpha, OrdinalCNF):
            raise InvariantViolation("jump height must be an OrdinalCNF")
        if not isinstance(self.body, Term):
            raise InvariantViolation("jump body must be a term")
        if isinstance(self.body, Sum):
            raise InvariantViolation("jump of a sum: jumps apply to trees only")
        _init_hash(self, self.alpha, self.body)

    def __hash__(self):
        return self._hash


@dataclass(frozen=True, eq=True, repr=True)
class Cat(Term):
    label: Term
    children: tuple = ()
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if not isinstance(self.label, (Atom, Jump)):
            raise InvariantViolation("cat label must be an atom or a jump")
        for c in self.children:
            if not isinstance(c, Term):
                raise InvariantViolation("cat children must be terms")
            if isinstance(c, Sum):
                raise InvariantViolation("cat children must be trees, not sums")
        _init_hash(self, self.label, self.children)

    def __hash__(self):
        return self._hash


@dataclass(frozen=True, eq=True, repr=True)
class Sum(Term):
    components: tuple
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise InvariantViolation("sum needs at least one component")
        for c in self.components:
            if not isinstance(c, Term):
                raise InvariantViolation("sum components must be terms")
            if isinstance(c, Sum):
                raise InvariantViolation("sum inside sum")
        _init_hash(self, self.components)

    def __hash__(self):
        return self._hash


def is_tree(t: Term) -> bool:
    return not isinstance(t, Sum)


def tree_view(t: Term):
    """``(label, children)`` of a tree term; atoms and bare jumps are leaves."""
    if isinstance(t, Cat):
        return t.label, t.children
    if isinstance(t, (Atom, Jump)):
        return t, ()
    raise TypeError("tree_view of a sum")


def bare(label: Term) -> Cat:
    """The single-node tree carrying ``label``."""
    return Cat(label, ())


# ---------------------------------------------------------------- printing

def print_term(t: Term) -> str:
    return _expr(t)


def _ord(alpha: OrdinalCNF) -> str:
    return print_ordinal(alpha).replace(" ", "")


def _label(lab: Term) -> str:
    if isinstance(lab, Atom):
        return lab.q
    return f"(jump {_ord(lab.alpha)} {_arg(lab.body)})"


def _uses_arrow(t: Term) -> bool:
    return isinstance(t, Cat) and len(t.children) == 1 and isinstance(t.children[0], Cat)


def _expr(t: Term) -> str:
    """Print in expression position (arrows allowed at top)."""
    if _uses_arrow(t):
        head = f"<{_expr(t.label.body)}>" if _is_plain_jump(t.label) else _label(t.label)
        return f"{head} -> {_tail(t.children[0])}"
    return _arg(t)


def _tail(t: Cat) -> str:
    # right operand of an arrow: a bare atom here denotes the single-node tree
    if not t.children:
        if isinstance(t.label, Atom):
            return t.label.q
        if _is_plain_jump(t.label):
            return f"<{_expr(t.label.body)}>"
    return _expr(t)


def _is_plain_jump(lab: Term) -> bool:
    return isinstance(lab, Jump) and not lab.alpha


def _arg(t: Term) -> str:
    """Print in argument position (arrows parenthesized)."""
    if isinstance(t, Atom):
        return t.q
    if isinstance(t, Jump):
        return f"(jump {_ord(t.alpha)} {_arg(t.body)})"
    if isinstance(t, Sum):
        return "(sum " + " ".join(_arg(c) for c in t.components) + ")"
    if _uses_arrow(t):
        return f"({_expr(t)})"
    if not t.children and _is_plain_jump(t.label):
        return f"<{_expr(t.label.body)}>"
    return "(cat " + " ".join([_label(t.label)] + [_arg(c) for c in t.children]) + ")"


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(->|[()<>]|(?:[^\s()<>-]|-(?!>))+)")
_KEYWORDS = {"jump", "cat", "sum"}


class _TermParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg):
        return ParseError(f"{msg} at offset {self.pos} in {self.text!r}")

    def peek(self):
        m = _TOKEN.match(self.text, self.pos)
        return m.group(1) if m else None

    def take(self, expected=None):
        m = _TOKEN.match(self.text, self.pos)
        if not m:
            raise self.error(f"expected {expected or 'token'}")
        tok = m.group(1)
        if expected is not None and tok != expected:
            raise self.error(f"expected {expected!r}, got {tok!r}")
        self.pos = m.end()
        return tok

    def ordinal_token(self):
        # an ordinal may contain parentheses; read to whitespace at depth 0
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        start, depth = self.pos, 0
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0:
                    break
                depth -= 1
            elif ch.isspace() and depth == 0:
                break
            self.pos += 1
        tok = self.text[start:self.pos]
        if not tok:
            raise self.error("missing jump height")
        return parse_ordinal(tok)

    def parse(self) -> Term:
        t = self.expr()
        if self.text[self.pos:].strip():
            raise self.error("trailing input")
        return t

    def expr(self) -> Term:
        head = self.primary()
        if self.peek() != "->":
            return head
        self.take("->")
        rest = self.expr()
        label = _as_label(head)
        if label is None:
            raise self.error("left side of '->' must be a single node")
        if isinstance(rest, Sum):
            children = rest.components
        elif isinstance(rest, Atom):
            children = (Cat(rest, ()),)
        elif isinstance(rest, Jump):
            children = (Cat(rest, ()),)
        else:
            children = (rest,)
        return Cat(label, children)

    def primary(self) -> Term:
        tok = self.peek()
        if tok is None:
            raise self.error("unexpected end of input")
        if tok == "<":
            self.take("<")
            inner = self.expr()
            self.take(">")
            return Cat(Jump(ZERO, inner), ())
        if tok == "(":
            self.take("(")
            kw = self.peek()
            if kw in _KEYWORDS:
                self.take()
                t = getattr(self, "form_" + kw)()
            else:
                t = self.expr()
            self.take(")")
            return t
        if tok in ("->", ")", ">"):
            raise self.error(f"unexpected {tok!r}")
        self.take()
        return Atom(tok)

    def args(self):
        out = []
        while self.peek() not in (")", None):
            out.append(self.primary())
        return out

    def form_jump(self):
        alpha = self.ordinal_token()
        body = self.expr()
        return Jump(alpha, body)

    def form_cat(self):
        items = self.args()
        if not items:
            raise self.error("cat needs a label")
        label = _as_label(items[0])
        if label is None:
            raise InvariantViolation("cat label must be an atom or jump form")
        return Cat(label, items[1:])

    def form_sum(self):
        items = self.args()
        if not items:
            raise self.error("sum needs at least one component")
        return Sum(items)


def _as_label(t: Term):
    if isinstance(t, (Atom, Jump)):
        return t
    if isinstance(t, Cat) and not t.children:
        return t.label
    return None


def parse_term(text: str) -> Term:
    return _TermParser(text).parse()


# ---------------------------------------------------------------- utilities

def atoms(t: Term) -> Iterator[str]:
    """Yield every atom name occurring in ``t`` (with repetition)."""
    stack = [t]
    while stack:
        s = stack.pop()
        if isinstance(s, Atom):
            yield s.q
        elif isinstance(s, Jump):
            stack.append(s.body)
        elif isinstance(s, Cat):
            stack.append(s.label)
            stack.extend(s.children)
        else:
            stack.extend(s.components)


def relabel(t: Term, mapping: Mapping[str, str]) -> Term:
    if isinstance(t, Atom):
        return Atom(mapping.get(t.q, t.q))
    if isinstance(t, Jump):
        return Jump(t.alpha, relabel(t.body, mapping))
    if isinstance(t, Cat):
        return Cat(relabel(t.label, mapping), tuple(relabel(c, mapping) for c in t.children))
    return Sum(tuple(relabel(c, mapping) for c in t.components))


def swap01(t: Term) -> Term:
    return relabel(t, {"0": "1", "1": "0"})


def _wrap(q: Atom, k: int) -> Term:
    t = q
    for _ in range(k):
        t = Cat(Jump(ZERO, t), ())
    return t


def iota(t: Term, levels: int) -> Term:
    """Replace every atom ``q`` by ``<q>`` nested ``levels`` times."""
    if levels < 0:
        raise ValueError("levels must be >= 0")
    if levels == 0:
        return t

    def sub(s, as_label=False):
        if isinstance(s, Atom):
            return Jump(ZERO, _wrap(s, levels - 1)) if as_label else _wrap(s, levels)
        if isinstance(s, Jump):
            return Jump(s.alpha, sub(s.body))
        if isinstance(s, Cat):
            return Cat(sub(s.label, True), tuple(sub(c) for c in s.children))
        return Sum(tuple(sub(c) for c in s.components))

    return sub(t)


@dataclass(frozen=True)
class TermStats:
    """``max_jump_height`` is ``w^alpha`` for the largest jump exponent, 0 without jumps."""

    nodes: int
    height: int
    jump_free: bool
    max_jump_height: OrdinalCNF


def node_count(t: Term) -> int:
    """Atom and Cat positions (a bare jump counts as a node); sums are transparent."""
    if isinstance(t, Atom):
        return 1
    if isinstance(t, Jump):
        return 1 + node_count(t.body)
    if isinstance(t, Cat):
        own = 1 + (node_count(t.label.body) if isinstance(t.label, Jump) else 0)
        return own + sum(node_count(c) for c in t.children)
    return sum(node_count(c) for c in t.components)


def _height(t: Term) -> int:
    if isinstance(t, Sum):
        return max(_height(c) for c in t.components)
    if isinstance(t, Cat):
        return 1 + max((_height(c) for c in t.children), default=0)
    return 1


def _jumps(t: Term) -> Iterator[Jump]:
    stack = [t]
    while stack:
        s = stack.pop()
        if isinstance(s, Jump):
            yield s
            stack.append(s.body)
        elif isinstance(s, Cat):
            stack.append(s.label)
            stack.extend(s.children)
        elif isinstance(s, Sum):
            stack.extend(s.components)


def label_atom(label: Term):
    """The element a label stands for under ``q == <q> == <<q>>``, else None.

    Only height-0 wrappings of a single node reduce to an atom.
    """
    while True:
        if isinstance(label, Atom):
            return label.q
        if not isinstance(label, Jump) or label.alpha:
            return None
        body = label.body
        if isinstance(body, Cat):
            if body.children:
                return None
            body = body.label
        label = body


def stats(t: Term) -> TermStats:
    jumps = list(_jumps(t))
    return TermStats(
        nodes=node_count(t),
        height=_height(t),
        jump_free=all(label_atom(j) is not None for j in jumps),
        max_jump_height=OrdinalCNF(((max(j.alpha for j in jumps), 1),)) if jumps else ZERO,
    )


def chain(n: int, first: str = "0") -> Term:
    """Alternating chain ``first -> other -> ...`` of length ``n`` over {0, 1}."""
    if n < 1:
        raise BadLength(f"chain length must be >= 1, got {n}")
    if first not in ("0", "1"):
        raise BadLength(f"chain start must be '0' or '1', got {first!r}")
    labels = [("0", "1")[(int(first) + i) % 2] for i in range(n)]
    if n == 1:
        return Atom(labels[0])
    t = Cat(Atom(labels[-1]), ())
    for q in reversed(labels[:-1]):
        t = Cat(Atom(q), (t,))
    return t


_TAG = {Atom: 0, Jump: 1, Cat: 2, Sum: 3}


def structural_key(t: Term) -> tuple:
    """Deterministic total key: constructor tag, then label, then children."""
    if isinstance(t, Atom):
        return (0, t.q)
    if isinstance(t, Jump):
        return (1, t.alpha.sort_key, structural_key(t.body))
    if isinstance(t, Cat):
        return (2, structural_key(t.label), tuple(structural_key(c) for c in t.children))
    return (3, tuple(structural_key(c) for c in t.components))
