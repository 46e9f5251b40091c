"""Brute-force deciders for the term order.

Both work on explicit node sets rather than on the term recursion:

* :func:`hom_leq` searches for a label-increasing map ``f`` from the nodes of
  ``S`` to the nodes of ``T`` with ``s ⊆ s' ⇒ f(s) ⊆ f(s')``;
* :func:`game_leq` solves a reduction game on the product of node sets by
  least-fixpoint iteration: Player I descends one child at a time in ``S``,
  Player II answers by staying or moving to any descendant in ``T``.

Root labels are compared with :func:`wadgeforest.order.label_leq`, recursing
into the same oracle for jump bodies.
"""
from __future__ import annotations

from dataclasses import dataclass

from .order import _checked, label_leq
from .qspec import QuasiOrder
from .term import Sum, Term, tree_view

__all__ = ["Forest", "hom_leq", "hom_witness", "verify_hom", "game_leq", "format_witness"]


@dataclass(frozen=True)
class Forest:
    """Flattened node table of a term, nodes in preorder."""

    paths: tuple
    labels: tuple
    parent: tuple
    children: tuple
    below: tuple  # below[i]: indices of i and all its descendants
    roots: tuple

    @classmethod
    def of(cls, t: Term) -> "Forest":
        comps = t.components if isinstance(t, Sum) else (t,)
        paths, labels, parent, children = [], [], [], []

        def add(node, path, par):
            idx = len(paths)
            label, kids = tree_view(node)
            paths.append(path)
            labels.append(label)
            parent.append(par)
            children.append([])
            if par is not None:
                children[par].append(idx)
            for k, c in enumerate(kids):
                add(c, f"{path}.{k}", idx)
            return idx

        roots = tuple(add(c, str(i), None) for i, c in enumerate(comps))
        below = [None] * len(paths)
        for i in reversed(range(len(paths))):
            s = {i}
            for c in children[i]:
                s |= below[c]
            below[i] = frozenset(s)
        return cls(tuple(paths), tuple(labels), tuple(parent),
                   tuple(tuple(c) for c in children), tuple(below), roots)

    def __len__(self):
        return len(self.paths)

    def ancestors(self, i):
        p = self.parent[i]
        while p is not None:
            yield p
            p = self.parent[p]


class _Hom:
    def __init__(self, Q: QuasiOrder):
        self.Q = Q
        self.cache: dict = {}

    def leq(self, S: Term, T: Term) -> bool:
        key = (S, T)
        if key not in self.cache:
            self.cache[key] = self.witness(S, T) is not None
        return self.cache[key]

    def witness(self, S: Term, T: Term):
        fs, ft = Forest.of(S), Forest.of(T)
        label_ok: dict = {}

        def ok(i, j):
            r = label_ok.get((i, j))
            if r is None:
                r = label_ok[i, j] = label_leq(self.Q, fs.labels[i], ft.labels[j], self.leq)
            return r

        memo: dict = {}

        def embed(i, j):
            # map the subtree of S-node i into the subtree of T-node j with i -> j
            key = (i, j)
            if key in memo:
                return memo[key]
            memo[key] = None
            if ok(i, j):
                f = {i: j}
                for c in fs.children[i]:
                    for j2 in sorted(ft.below[j]):
                        sub = embed(c, j2)
                        if sub is not None:
                            f.update(sub)
                            break
                    else:
                        break
                else:
                    memo[key] = f
            return memo[key]

        f = {}
        for r in fs.roots:
            for j in range(len(ft)):
                sub = embed(r, j)
                if sub is not None:
                    f.update(sub)
                    break
            else:
                return None
        return {fs.paths[i]: ft.paths[j] for i, j in f.items()}


def hom_leq(Q: QuasiOrder, S: Term, T: Term) -> bool:
    _checked(Q, S, T)
    return _Hom(Q).leq(S, T)


def hom_witness(Q: QuasiOrder, S: Term, T: Term):
    """The witnessing node map as ``{path_in_S: path_in_T}``, or None."""
    _checked(Q, S, T)
    return _Hom(Q).witness(S, T)


def verify_hom(Q: QuasiOrder, S: Term, T: Term, f: dict) -> bool:
    """Check a node map against the definition, pair by pair."""
    fs, ft = Forest.of(S), Forest.of(T)
    tindex = {p: j for j, p in enumerate(ft.paths)}
    if set(f) != set(fs.paths) or not set(f.values()) <= set(tindex):
        return False
    img = [tindex[f[p]] for p in fs.paths]
    h = _Hom(Q)
    for i in range(len(fs)):
        if not label_leq(Q, fs.labels[i], ft.labels[img[i]], h.leq):
            return False
        for a in fs.ancestors(i):
            if img[i] not in ft.below[img[a]]:
                return False
    return True


def format_witness(f: dict) -> str:
    return "\n".join(f"{s} => {t}" for s, t in f.items())


class _Game:
    def __init__(self, Q: QuasiOrder):
        self.Q = Q
        self.cache: dict = {}

    def leq(self, S: Term, T: Term) -> bool:
        key = (S, T)
        r = self.cache.get(key)
        if r is None:
            r = self.cache[key] = self.solve(S, T)
        return r

    def solve(self, S: Term, T: Term) -> bool:
        fs, ft = Forest.of(S), Forest.of(T)
        ok = [[label_leq(self.Q, fs.labels[i], ft.labels[j], self.leq) for j in range(len(ft))]
              for i in range(len(fs))]
        win: set = set()
        changed = True
        while changed:
            changed = False
            for i in range(len(fs)):
                for j in range(len(ft)):
                    if (i, j) in win or not ok[i][j]:
                        continue
                    if all(any((c, j2) in win for j2 in ft.below[j]) for c in fs.children[i]):
                        win.add((i, j))
                        changed = True
        # virtual start: I picks a component of S, II answers with any node of T
        return all(any((r, j) in win for j in range(len(ft))) for r in fs.roots)


def game_leq(Q: QuasiOrder, S: Term, T: Term) -> bool:
    _checked(Q, S, T)
    return _Game(Q).leq(S, T)
