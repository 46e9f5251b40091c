"""The quasi-order on nested labeled forests, with equivalence and canonical forms.

Comparison follows the inductive definition directly:

* a sum is below ``T`` iff every component is; a tree is below a sum iff it
  is below some component;
* for trees ``L_S -> S_i`` and ``L_T -> T_j``: if ``L_S`` is below ``L_T`` then
  every ``S_i`` must be below the whole of ``T``, otherwise the whole of ``S``
  must be below some ``T_j``;
* labels compare through :func:`label_leq`, which strips jumps by height.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Callable

from .errors import UnknownElement
from .ordinal import ord_cmp, Cmp
from .qspec import QuasiOrder
from .term import Atom, Cat, Jump, Sum, Term, atoms, bare, structural_key, node_count, tree_view

__all__ = [
    "leq", "equiv", "canon", "is_join_irreducible", "is_non_self_dual",
    "label_leq", "check_atoms", "relation", "Order",
]

Compare = Callable[[Term, Term], bool]


def label_leq(Q: QuasiOrder, a: Term, b: Term, compare: Compare) -> bool:
    """Compare two root labels; ``compare`` decides the term-level subproblems.

    This is the rule table shared by :func:`leq` and the brute-force oracles.
    """
    if isinstance(a, Atom):
        if isinstance(b, Atom):
            return Q.leq(a.q, b.q)
        # a constant is below a jump iff it is below the values the jump attains
        return compare(a, b.body)
    if isinstance(b, Atom):
        return compare(a.body, b)
    c = ord_cmp(a.alpha, b.alpha)
    if c == Cmp.EQ:
        return compare(a.body, b.body)
    if c == Cmp.GT:
        return compare(bare(a), b.body)
    return compare(a.body, bare(b))


class Order:
    """Memoized comparison over a fixed quasi-order.

    The memo table maps ``(S, T)`` to a bool. Results are deterministic, so
    concurrent writers can only ever store the same value.
    """

    def __init__(self, Q: QuasiOrder):
        self.Q = Q
        self._memo: dict = {}
        self._checked: set = set()

    def check(self, t: Term) -> None:
        if t in self._checked:
            return
        for q in atoms(t):
            if q not in self.Q:
                raise UnknownElement(f"atom {q!r} is not an element of Q")
        self._checked.add(t)

    def leq(self, S: Term, T: Term) -> bool:
        key = (S, T)
        r = self._memo.get(key)
        if r is None:
            r = self._leq(S, T)
            self._memo[key] = r
        return r

    def _leq(self, S: Term, T: Term) -> bool:
        if S is T or S == T:
            return True
        if isinstance(S, Sum):
            return all(self.leq(s, T) for s in S.components)
        if isinstance(T, Sum):
            return any(self.leq(S, t) for t in T.components)
        ls, cs = tree_view(S)
        lt, ct = tree_view(T)
        if label_leq(self.Q, ls, lt, self.leq):
            return all(self.leq(s, T) for s in cs)
        # an empty forest on the right makes this vacuously false
        return any(self.leq(S, t) for t in ct)

    def equiv(self, S: Term, T: Term) -> bool:
        return self.leq(S, T) and self.leq(T, S)

    def canon(self, T: Term) -> Term:
        if isinstance(T, Atom):
            return T
        if isinstance(T, Jump):
            return Jump(T.alpha, self.canon(T.body))
        if isinstance(T, Sum):
            comps = _dedupe(self, [self.canon(c) for c in T.components], lambda c, rest: any(self.leq(c, r) for r in rest))
            if len(comps) == 1:
                return comps[0]
            return Sum(tuple(sorted(comps, key=structural_key)))
        label = T.label if isinstance(T.label, Atom) else Jump(T.label.alpha, self.canon(T.label.body))
        kids = _dedupe(self, [self.canon(c) for c in T.children], lambda c, rest: self.leq(c, Cat(label, tuple(rest))))
        return Cat(label, tuple(sorted(kids, key=structural_key)))

    def is_join_irreducible(self, T: Term) -> bool:
        if not isinstance(T, Sum):
            return True
        return any(self.leq(T, c) for c in T.components)


def _dedupe(order: Order, members: list, dominated) -> list:
    """Drop members dominated by the rest, trying the least preferred first.

    For children lists "the rest" means the tree with the remaining children,
    so a child below the bare root is dropped too.

    Preference is fewer nodes, then the structural key, so among mutually
    equivalent members the structurally least survives.
    """
    uniq = list(dict.fromkeys(members))
    uniq.sort(key=lambda m: (node_count(m), structural_key(m)), reverse=True)
    kept = list(uniq)
    for m in uniq:
        rest = [r for r in kept if r is not m]
        if dominated(m, rest):
            kept = rest
    return kept


@lru_cache(maxsize=64)
def _order_for(Q: QuasiOrder) -> Order:
    return Order(Q)


def _checked(Q: QuasiOrder, *terms: Term) -> Order:
    o = _order_for(Q)
    for t in terms:
        o.check(t)
    return o


def check_atoms(Q: QuasiOrder, *terms: Term) -> None:
    """Raise :class:`UnknownElement` if any atom is not in ``Q``."""
    _checked(Q, *terms)


def leq(Q: QuasiOrder, S: Term, T: Term) -> bool:
    return _checked(Q, S, T).leq(S, T)


def equiv(Q: QuasiOrder, S: Term, T: Term) -> bool:
    return _checked(Q, S, T).equiv(S, T)


def relation(Q: QuasiOrder, S: Term, T: Term) -> str:
    """One of ``<``, ``>``, ``=``, ``||``."""
    o = _checked(Q, S, T)
    a, b = o.leq(S, T), o.leq(T, S)
    return {(True, True): "=", (True, False): "<", (False, True): ">", (False, False): "||"}[a, b]


def canon(Q: QuasiOrder, T: Term) -> Term:
    return _checked(Q, T).canon(T)


def is_join_irreducible(Q: QuasiOrder, T: Term) -> bool:
    """True iff ``T`` names a sigma-join-irreducible (non-self-dual) degree."""
    return _checked(Q, T).is_join_irreducible(T)


is_non_self_dual = is_join_irreducible
