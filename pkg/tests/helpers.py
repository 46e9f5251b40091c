"""Seeded random generators shared by the test modules."""
import random

from hypothesis import strategies as st

from wadgeforest.ordinal import OMEGA, ZERO, OrdinalCNF, nat
from wadgeforest.stream import PASS
from wadgeforest.term import Atom, Cat, Jump, Sum

OMEGA_SQ = OrdinalCNF(((nat(2), 1),))
JUMP_HEIGHTS = (ZERO, nat(1), OMEGA, OMEGA_SQ)


def random_tree(rng, elems, depth=3, jumps=(), width=2, p_jump=0.25):
    if jumps and depth > 1 and rng.random() < p_jump:
        label = Jump(rng.choice(jumps), random_tree(rng, elems, depth - 1, jumps, width, p_jump))
    else:
        label = Atom(rng.choice(elems))
    if depth <= 1:
        return label if isinstance(label, Atom) and rng.random() < 0.5 else Cat(label, ())
    k = rng.randint(0, width)
    if k == 0 and isinstance(label, Atom) and rng.random() < 0.5:
        return label
    return Cat(label, tuple(random_tree(rng, elems, depth - 1, jumps, width, p_jump) for _ in range(k)))


def random_term(rng, elems, depth=3, jumps=(), width=2, p_sum=0.3):
    if rng.random() < p_sum:
        return Sum(tuple(random_tree(rng, elems, depth, jumps, width) for _ in range(rng.randint(1, 3))))
    return random_tree(rng, elems, depth, jumps, width)


def random_ordinal(rng, depth=2, max_terms=3, max_coef=3):
    if depth == 0:
        k = rng.randint(0, max_coef)
        return nat(k)
    exps = {random_ordinal(rng, depth - 1, max_terms, max_coef) for _ in range(rng.randint(0, max_terms))}
    exps = sorted(exps, reverse=True)
    return OrdinalCNF(tuple((e, rng.randint(1, max_coef)) for e in exps))


def random_stream(rng, length, max_nat=9, p_pass=0.3):
    return tuple(PASS if rng.random() < p_pass else rng.randint(0, max_nat) for _ in range(length))


# hypothesis strategies -------------------------------------------------

def ordinals(depth=2):
    if depth == 0:
        return st.integers(0, 5).map(nat)
    sub = ordinals(depth - 1)
    pairs = st.lists(st.tuples(sub, st.integers(1, 4)), max_size=3)

    def build(ps):
        best = {}
        for e, c in ps:
            best[e] = c
        return OrdinalCNF(tuple(sorted(best.items(), key=lambda ec: ec[0].sort_key, reverse=True)))

    return pairs.map(build)


def trees(elems, jumps=()):
    leaf = st.sampled_from(elems).map(Atom)
    labels = st.sampled_from(elems).map(Atom)

    def extend(children):
        lab = labels
        if jumps:
            lab = st.one_of(labels, st.builds(Jump, st.sampled_from(jumps), children))
        return st.builds(Cat, lab, st.lists(children, max_size=3).map(tuple))

    return st.recursive(leaf, extend, max_leaves=6)


def terms(elems, jumps=()):
    t = trees(elems, jumps)
    return st.one_of(t, st.lists(t, min_size=1, max_size=3).map(lambda cs: Sum(tuple(cs))))


def rng(seed=0):
    return random.Random(seed)
