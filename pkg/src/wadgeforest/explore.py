"""Enumeration of small degrees, Hasse diagrams and structural reports."""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx

from .errors import ResourceLimit
from .order import Order, _checked
from .ordinal import OrdinalCNF
from .qspec import QuasiOrder
from .term import Atom, Cat, Jump, Sum, Term, node_count, print_term, structural_key

__all__ = [
    "enum_terms", "comparison_matrix", "hasse", "tsv_matrix",
    "structure_report", "StructureReport", "max_antichain",
]

DEFAULT_CAP = 500_000


def _pref(t: Term):
    return node_count(t), structural_key(t)


def _top(t: Term) -> Term:
    """Leaves read as atoms outside of child position."""
    if isinstance(t, Cat) and not t.children and isinstance(t.label, Atom):
        return t.label
    if isinstance(t, Sum):
        return Sum(tuple(_top(c) for c in t.components))
    return t


def _multisets(reps_by_size: dict, total: int, min_parts: int = 0):
    """Multisets of representatives whose node counts add up to ``total``."""
    pool = [(n, i) for n in sorted(reps_by_size) for i in range(len(reps_by_size[n]))]

    def rec(start, remaining, acc):
        if remaining == 0:
            if len(acc) >= min_parts:
                yield tuple(acc)
            return
        for k in range(start, len(pool)):
            n, i = pool[k]
            if n > remaining:
                break
            acc.append(reps_by_size[n][i])
            yield from rec(k, remaining - n, acc)
            acc.pop()

    yield from rec(0, total, [])


def enum_terms(Q: QuasiOrder, max_nodes: int, allow_jumps: Sequence[OrdinalCNF] = (),
               cap: int = DEFAULT_CAP) -> list:
    """One canonical representative per equivalence class with ``<= max_nodes`` nodes.

    Trees are built bottom-up from the representatives of smaller classes
    (the order is a congruence for every constructor), canonicalized, and
    compared against the classes already found. Forests of pairwise
    incomparable representatives are distinct classes on the nose.
    """
    if max_nodes < 1:
        raise ValueError("max_nodes must be >= 1")
    order = _checked(Q)
    budget = [cap]

    def spend():
        budget[0] -= 1
        if budget[0] < 0:
            raise ResourceLimit(f"more than {cap} candidates; raise the cap or shrink the search")

    trees: dict = {}      # node count -> list of representatives (child form)
    all_trees: list = []
    for n in range(1, max_nodes + 1):
        labels = [(Atom(q), 1) for q in Q.elements]
        for alpha in allow_jumps:
            for m in range(1, n):
                labels += [(Jump(alpha, body), 1 + m) for body in trees.get(m, ())]
        found: list = []
        for label, cost in labels:
            if cost > n:
                continue
            for kids in _multisets(trees, n - cost):
                spend()
                cand = order.canon(Cat(label, kids))
                if node_count(cand) < n:
                    continue
                _insert(order, cand, all_trees, found)
        trees[n] = sorted(found, key=_pref)
        all_trees.extend(trees[n])

    forests = set()
    for n in range(2, max_nodes + 1):
        for comps in _multisets(trees, n, min_parts=2):
            spend()
            cand = order.canon(Sum(comps))
            if isinstance(cand, Sum) and node_count(cand) == n:
                forests.add(cand)

    out = {order.canon(_top(t)) for t in itertools.chain(all_trees, forests)}
    return sorted(out, key=_pref)


def _insert(order: Order, cand: Term, older: list, found: list) -> None:
    for rep in older:
        if order.equiv(cand, rep):
            return
    for k, rep in enumerate(found):
        if order.equiv(cand, rep):
            if _pref(cand) < _pref(rep):
                found[k] = cand
            return
    found.append(cand)


# ---------------------------------------------------------------- relations

def _row(args):
    Q, terms, i = args
    o = Order(Q)
    return [o.leq(terms[i], t) for t in terms]


def comparison_matrix(Q: QuasiOrder, terms: Sequence[Term], jobs: int = 1) -> list:
    """``m[i][j] = terms[i] ⊴ terms[j]``; rows are split across processes if ``jobs > 1``."""
    terms = list(terms)
    order = _checked(Q, *terms)
    if jobs > 1 and len(terms) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_row, [(Q, terms, i) for i in range(len(terms))], chunksize=8))
    return [[order.leq(s, t) for t in terms] for s in terms]


def hasse(Q: QuasiOrder, terms: Sequence[Term], jobs: int = 1) -> str:
    """DOT digraph of the covering relation, drawn bottom to top.

    Self-dual (join-reducible) degrees are drawn as boxes.
    """
    terms = list(terms)
    order = _checked(Q, *terms)
    m = comparison_matrix(Q, terms, jobs)
    n = len(terms)
    lt = [[m[i][j] and not m[j][i] for j in range(n)] for i in range(n)]
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for i, t in enumerate(terms):
        shape = "ellipse" if order.is_join_irreducible(t) else "box"
        label = print_term(t).replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  n{i} [label="{label}", shape={shape}];')
    for i in range(n):
        for j in range(n):
            if lt[i][j] and not any(lt[i][k] and lt[k][j] for k in range(n)):
                lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tsv_matrix(Q: QuasiOrder, terms: Sequence[Term], jobs: int = 1) -> str:
    terms = list(terms)
    m = comparison_matrix(Q, terms, jobs)
    sym = {(True, True): "=", (True, False): "<", (False, True): ">", (False, False): "||"}
    lines = []
    for i, j in itertools.combinations(range(len(terms)), 2):
        lines.append(f"{print_term(terms[i])}\t{print_term(terms[j])}\t{sym[m[i][j], m[j][i]]}")
    return "\n".join(lines) + ("\n" if lines else "")


def max_antichain(le: Sequence[Sequence[bool]]) -> list:
    """Maximum antichain of a finite partial order given by its ``<=`` matrix.

    By Dilworth and König: with ``G`` the bipartite graph of strict
    comparabilities, the elements whose two copies both avoid a minimum
    vertex cover form a maximum antichain.
    """
    n = len(le)
    if n == 0:
        return []
    G = nx.Graph()
    left = [("L", i) for i in range(n)]
    G.add_nodes_from(left)
    G.add_nodes_from(("R", i) for i in range(n))
    G.add_edges_from((("L", i), ("R", j)) for i in range(n) for j in range(n)
                     if i != j and le[i][j])
    matching = nx.bipartite.hopcroft_karp_matching(G, top_nodes=left)
    cover = nx.bipartite.to_vertex_cover(G, matching, top_nodes=left)
    return [i for i in range(n) if ("L", i) not in cover and ("R", i) not in cover]


@dataclass
class StructureReport:
    max_antichain_among_irreducibles: int
    antichain_witness: list = field(default_factory=list)
    sl_ordered: bool = True
    irreducible_count: int = 0
    exact: bool = True

    def lines(self) -> list:
        return [
            f"irreducible degrees: {self.irreducible_count}",
            f"max antichain among irreducibles: {self.max_antichain_among_irreducibles}"
            + ("" if self.exact else " (lower bound)"),
            "witness: " + ", ".join(print_term(t) for t in self.antichain_witness),
            f"semi-linearly ordered: {'yes' if self.sl_ordered else 'no'}",
        ]


def structure_report(Q: QuasiOrder, terms: Sequence[Term], jobs: int = 1) -> StructureReport:
    """Largest antichain among the join-irreducible members of ``terms``.

    ``terms`` must be pairwise inequivalent so the order on them is a
    partial order. The antichain is exact at every size.
    """
    order = _checked(Q, *terms)
    irr = [t for t in terms if order.is_join_irreducible(t)]
    m = comparison_matrix(Q, irr, jobs)
    witness = [irr[i] for i in max_antichain(m)]
    return StructureReport(
        max_antichain_among_irreducibles=len(witness),
        antichain_witness=witness,
        sl_ordered=len(witness) <= 2,
        irreducible_count=len(irr),
    )
