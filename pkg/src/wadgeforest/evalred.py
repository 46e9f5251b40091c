"""Evaluation of the complete functions of jump-free terms, and reductions.

``eval_omega(Q, T, x)`` reads ``x`` as a finite prefix of a mind-change
process: in root mode passes and even numbers keep the current guess, and
the first odd number ``2k + 1`` abandons the root and hands the rest of the
stream to child ``k``. A forest first waits for a component selector.

``synth_reduction`` builds a :class:`Plan`, a small online stream program
whose output, fed to ``T``, always lands on a label at least as large as
the one ``S`` reaches on the input.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidSelector, JumpTermNotEvaluable, NotReducible
from .order import Order, _checked
from .qspec import QuasiOrder
from .stream import PASS
from .term import Sum, Term, label_atom, stats, tree_view

__all__ = [
    "Determined", "Undetermined", "UNDETERMINED", "Value",
    "Plan", "ConstRoot", "WaitRoot", "EnterBranch", "ReadSelector", "EmitSelector",
    "eval_omega", "synth_reduction", "run_transducer", "format_plan",
    "valid_inputs", "random_input", "check_soundness", "SoundnessReport",
]


@dataclass(frozen=True)
class Determined:
    q: str

    def __str__(self):
        return self.q


@dataclass(frozen=True)
class Undetermined:
    def __str__(self):
        return "undetermined"


UNDETERMINED = Undetermined()
Value = Determined | Undetermined


def _require_jump_free(T: Term) -> None:
    if not stats(T).jump_free:
        raise JumpTermNotEvaluable(f"{T} contains a jump; only jump-free terms are evaluable")


def eval_omega(Q: QuasiOrder, T: Term, x: Sequence) -> Value:
    _checked(Q, T)
    _require_jump_free(T)
    return _eval(T, x)


def _eval(T: Term, x: Sequence) -> Value:
    i, n = 0, len(x)
    while True:
        if isinstance(T, Sum):
            while i < n and x[i] is PASS:
                i += 1
            if i == n:
                return UNDETERMINED
            sel = x[i]
            if sel >= len(T.components):
                raise InvalidSelector(f"selector {sel} out of range for {len(T.components)} components")
            T, i = T.components[sel], i + 1
            continue
        label, children = tree_view(T)
        if not children:
            return Determined(label_atom(label))
        while i < n and (x[i] is PASS or x[i] % 2 == 0):
            i += 1
        if i == n:
            return Determined(label_atom(label))
        k = x[i] // 2
        if k >= len(children):
            raise InvalidSelector(f"marker {x[i]} selects child {k} of {len(children)}")
        T, i = children[k], i + 1


# ---------------------------------------------------------------- plans

class Plan:
    __slots__ = ()


@dataclass(frozen=True)
class ConstRoot(Plan):
    """Stay at the target's current root: one pass per input symbol."""


@dataclass(frozen=True)
class WaitRoot(Plan):
    """Pass while the source is at its root; marker ``2k+1`` switches to ``branches[k]``."""

    branches: tuple


@dataclass(frozen=True)
class EnterBranch(Plan):
    """Emit marker ``2j+1`` now, then continue with ``then`` inside target child ``j``."""

    j: int
    then: Plan


@dataclass(frozen=True)
class ReadSelector(Plan):
    """Pass through leading passes; source selector ``i`` switches to ``branches[i]``."""

    branches: tuple


@dataclass(frozen=True)
class EmitSelector(Plan):
    """Emit target selector ``j`` now, then continue with ``then``."""

    j: int
    then: Plan


def synth_reduction(Q: QuasiOrder, S: Term, T: Term) -> Plan:
    order = _checked(Q, S, T)
    _require_jump_free(S)
    _require_jump_free(T)
    if not order.leq(S, T):
        raise NotReducible(f"{S} is not below {T}")
    return _synth(order, S, T)


def _first(order: Order, S: Term, targets) -> int:
    # smallest witness index
    return next(j for j, t in enumerate(targets) if order.leq(S, t))


def _synth(order: Order, S: Term, T: Term) -> Plan:
    if isinstance(S, Sum):
        if isinstance(T, Sum):
            branches = []
            for s in S.components:
                j = _first(order, s, T.components)
                branches.append(EmitSelector(j, _synth(order, s, T.components[j])))
            return ReadSelector(tuple(branches))
        return ReadSelector(tuple(_synth(order, s, T) for s in S.components))
    if isinstance(T, Sum):
        j = _first(order, S, T.components)
        return EmitSelector(j, _synth(order, S, T.components[j]))
    ls, cs = tree_view(S)
    lt, ct = tree_view(T)
    if order.Q.leq(label_atom(ls), label_atom(lt)):
        if not cs:
            return ConstRoot()
        return WaitRoot(tuple(_synth(order, s, T) for s in cs))
    j = _first(order, S, ct)
    return EnterBranch(j, _synth(order, S, ct[j]))


def run_transducer(plan: Plan, x: Sequence) -> tuple:
    out = []
    i, n = 0, len(x)
    while True:
        if isinstance(plan, EnterBranch):
            out.append(2 * plan.j + 1)
            plan = plan.then
        elif isinstance(plan, EmitSelector):
            out.append(plan.j)
            plan = plan.then
        elif isinstance(plan, ConstRoot):
            out.extend([PASS] * (n - i))
            return tuple(out)
        elif isinstance(plan, WaitRoot):
            while i < n and (x[i] is PASS or x[i] % 2 == 0):
                out.append(PASS)
                i += 1
            if i == n:
                return tuple(out)
            k = x[i] // 2
            if k >= len(plan.branches):
                raise InvalidSelector(f"marker {x[i]} selects branch {k} of {len(plan.branches)}")
            out.append(PASS)
            plan, i = plan.branches[k], i + 1
        elif isinstance(plan, ReadSelector):
            while i < n and x[i] is PASS:
                out.append(PASS)
                i += 1
            if i == n:
                return tuple(out)
            if x[i] >= len(plan.branches):
                raise InvalidSelector(f"selector {x[i]} out of range for {len(plan.branches)} components")
            out.append(PASS)
            plan, i = plan.branches[x[i]], i + 1
        else:
            raise TypeError(f"not a plan: {plan!r}")


def format_plan(plan: Plan, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(plan, ConstRoot):
        return pad + "const-root"
    if isinstance(plan, EnterBranch):
        return f"{pad}enter-branch {plan.j}\n" + format_plan(plan.then, indent + 1)
    if isinstance(plan, EmitSelector):
        return f"{pad}emit-selector {plan.j}\n" + format_plan(plan.then, indent + 1)
    head = "wait-root" if isinstance(plan, WaitRoot) else "read-selector"
    word = "child" if isinstance(plan, WaitRoot) else "component"
    lines = [pad + head]
    for k, b in enumerate(plan.branches):
        lines.append(f"{pad}  {word} {k}:")
        lines.append(format_plan(b, indent + 2))
    return "\n".join(lines)


# ---------------------------------------------------------------- inputs

def _alphabet(T: Term, evens: Sequence[int]):
    """Valid next symbols at the start of ``T``'s stream, with the follow-up term."""
    if isinstance(T, Sum):
        yield PASS, T
        for i, c in enumerate(T.components):
            yield i, c
        return
    _, children = tree_view(T)
    yield PASS, T
    if not children:
        return
    for e in evens:
        yield e, T
    for k, c in enumerate(children):
        yield 2 * k + 1, c


def valid_inputs(T: Term, max_len: int, evens: Sequence[int] = (0,)) -> Iterator[tuple]:
    """Every stream of length ``<= max_len`` over ``T``'s valid alphabet.

    The alphabet at each point is pass, the component selectors of a forest,
    the child markers of a root, and ``evens`` while a root has children.
    """
    stack = [((), T)]
    while stack:
        prefix, state = stack.pop()
        yield prefix
        if len(prefix) == max_len:
            continue
        for sym, nxt in reversed(list(_alphabet(state, evens))):
            stack.append((prefix + (sym,), nxt))


def random_input(T: Term, length: int, rng: random.Random, evens: Sequence[int] = (0, 2, 4)) -> tuple:
    out, state = [], T
    for _ in range(length):
        sym, state = rng.choice(list(_alphabet(state, evens)))
        out.append(sym)
    return tuple(out)


@dataclass
class SoundnessReport:
    checked: int = 0
    determined: int = 0
    failures: list = None

    def __post_init__(self):
        if self.failures is None:
            self.failures = []

    @property
    def ok(self) -> bool:
        return not self.failures


def check_soundness(Q: QuasiOrder, S: Term, T: Term, inputs, plan: Plan | None = None) -> SoundnessReport:
    """Run ``plan`` on each input and check the target value dominates the source value."""
    if plan is None:
        plan = synth_reduction(Q, S, T)
    else:
        _checked(Q, S, T)
        _require_jump_free(S)
        _require_jump_free(T)
    rep = SoundnessReport()
    for x in inputs:
        rep.checked += 1
        v = _eval(S, x)
        if not isinstance(v, Determined):
            continue
        rep.determined += 1
        y = run_transducer(plan, x)
        w = _eval(T, y)
        if not (isinstance(w, Determined) and Q.leq(v.q, w.q)):
            rep.failures.append((x, y, v, w))
    return rep
