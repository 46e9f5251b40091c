import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_tree, rng
from wadgeforest.errors import InvalidSelector, JumpTermNotEvaluable, NotReducible
from wadgeforest.evalred import (
    UNDETERMINED, ConstRoot, Determined, EmitSelector, EnterBranch, ReadSelector, WaitRoot,
    check_soundness, eval_omega, format_plan, random_input, run_transducer, synth_reduction, valid_inputs,
)
from wadgeforest.order import leq
from wadgeforest.qspec import builtin
from wadgeforest.stream import PASS
from wadgeforest.term import iota, parse_term as P

p = PASS
Q2 = builtin("antichain:2")


def test_eval_examples():
    assert eval_omega(Q2, P("0 -> 1"), (p, p, p)) == Determined("0")
    assert eval_omega(Q2, P("0 -> 1"), (1,)) == Determined("1")
    assert eval_omega(Q2, P("0 -> 1 -> 0"), (1, 1)) == Determined("0")
    assert eval_omega(Q2, P("(sum 0 1)"), (p,)) is UNDETERMINED
    assert eval_omega(Q2, P("(sum 0 1)"), (1,)) == Determined("1")


def test_eval_details():
    t = P("(cat 0 (1 -> 0) 1)")
    assert eval_omega(Q2, t, (4, p, 2)) == Determined("0")
    assert eval_omega(Q2, t, (4, 3)) == Determined("1")
    assert eval_omega(Q2, t, (1, 8, p, 1)) == Determined("0")
    assert eval_omega(Q2, P("1"), (7, 9)) == Determined("1")
    assert eval_omega(Q2, P("<1>"), (5,)) == Determined("1")
    assert eval_omega(Q2, iota(P("0 -> 1"), 2), (1,)) == Determined("1")
    assert eval_omega(Q2, P("(sum 0 (0 -> 1))"), (p, 1, 2, 1)) == Determined("1")


def test_eval_errors():
    with pytest.raises(InvalidSelector):
        eval_omega(Q2, P("0 -> 1"), (3,))
    with pytest.raises(InvalidSelector):
        eval_omega(Q2, P("(sum 0 1)"), (2,))
    with pytest.raises(JumpTermNotEvaluable):
        eval_omega(Q2, P("(cat (jump 1 0))"), ())
    with pytest.raises(JumpTermNotEvaluable):
        eval_omega(Q2, P("<0 -> 1>"), ())


def test_synth_examples():
    assert synth_reduction(Q2, P("<1>"), P("0 -> 1")) == EnterBranch(0, ConstRoot())
    plan = synth_reduction(Q2, P("0 -> 1"), P("0 -> 1 -> 0"))
    assert plan == WaitRoot((EnterBranch(0, ConstRoot()),))
    assert run_transducer(plan, (p, 2, 1, p)) == (p, p, p, 1, p)


def test_synth_forest_cases():
    plan = synth_reduction(Q2, P("(sum 0 1)"), P("(sum 1 (0 -> 1))"))
    assert plan == ReadSelector((EmitSelector(1, ConstRoot()), EmitSelector(0, ConstRoot())))
    plan = synth_reduction(Q2, P("0 -> 1"), P("(sum 1 (0 -> 1))"))
    assert plan == EmitSelector(1, WaitRoot((EnterBranch(0, ConstRoot()),)))
    plan = synth_reduction(Q2, P("(sum 0 1)"), P("0 -> 1"))
    assert plan == ReadSelector((ConstRoot(), EnterBranch(0, ConstRoot())))


def test_synth_not_reducible():
    with pytest.raises(NotReducible):
        synth_reduction(Q2, P("0 -> 1 -> 0"), P("0 -> 1"))
    with pytest.raises(JumpTermNotEvaluable):
        synth_reduction(Q2, P("(cat (jump 1 0))"), P("(cat (jump 1 0))"))


def test_run_examples():
    assert run_transducer(EnterBranch(0, ConstRoot()), (p, p)) == (1, p, p)
    plan = WaitRoot((ConstRoot(),))
    assert run_transducer(plan, (p,) * 5) == (p,) * 5
    with pytest.raises(InvalidSelector):
        run_transducer(ReadSelector((ConstRoot(),)), (p, 3))


def test_reflexive_plan_reencodes():
    r = rng(3)
    for T in [P("0 -> 1 -> 0"), P("(sum (0 -> 1) (1 -> 0))"), P("(cat 0 1 (1 -> 0 -> 1))")]:
        plan = synth_reduction(Q2, T, T)
        for _ in range(200):
            x = random_input(T, r.randint(0, 8), r)
            y = run_transducer(plan, x)
            assert len(y) >= len(x)
            v = eval_omega(Q2, T, x)
            if v is not UNDETERMINED:
                assert eval_omega(Q2, T, y) == v


def test_format_plan():
    plan = synth_reduction(Q2, P("(sum 0 1)"), P("(sum 1 (0 -> 1))"))
    assert format_plan(plan) == (
        "read-selector\n"
        "  component 0:\n"
        "    emit-selector 1\n"
        "      const-root\n"
        "  component 1:\n"
        "    emit-selector 0\n"
        "      const-root"
    )


def test_valid_inputs_enumeration():
    xs = list(valid_inputs(P("0 -> 1"), 2))
    # root: p, 0, marker 1; after the marker only passes
    assert set(xs) == {(), (p,), (0,), (1,), (p, p), (p, 0), (p, 1), (0, p), (0, 0), (0, 1), (1, p)}
    assert len(xs) == len(set(xs))
    forest = list(valid_inputs(P("(sum 0 1)"), 1))
    assert set(forest) == {(), (p,), (0,), (1,)}


def test_conciliatory_trailing_pass():
    r = rng(11)
    for _ in range(300):
        T = random_tree(r, ["0", "1"], depth=4)
        x = random_input(T, r.randint(0, 6), r)
        assert eval_omega(Q2, T, x) == eval_omega(Q2, T, x + (p,))


@settings(max_examples=100)
@given(st.integers(0, 10_000), st.integers(0, 6), st.integers(0, 6))
def test_pass_monotone_prefix(seed, n, m):
    r = rng(seed)
    S = random_tree(r, ["0", "1"], depth=3)
    T = random_tree(r, ["0", "1"], depth=4)
    if not leq(Q2, S, T):
        S, T = T, T
    plan = synth_reduction(Q2, S, T)
    x = random_input(S, n + m, r)
    assert run_transducer(plan, x)[: len(run_transducer(plan, x[:n]))] == run_transducer(plan, x[:n])


def test_composition_of_plans_is_sound():
    r = rng(5)
    found = 0
    while found < 50:
        A, B, C = (random_tree(r, ["0", "1"], depth=3) for _ in range(3))
        if not (leq(Q2, A, B) and leq(Q2, B, C)):
            continue
        found += 1
        ab, bc = synth_reduction(Q2, A, B), synth_reduction(Q2, B, C)
        for x in valid_inputs(A, 5):
            v = eval_omega(Q2, A, x)
            w = eval_omega(Q2, C, run_transducer(bc, run_transducer(ab, x)))
            assert Q2.leq(v.q, w.q)


def test_soundness_report_flags_a_bad_plan():
    S, T = P("0 -> 1"), P("0 -> 1 -> 0")
    rep = check_soundness(Q2, S, T, valid_inputs(S, 3), plan=ConstRoot())
    assert not rep.ok and rep.failures
    rep = check_soundness(Q2, S, T, valid_inputs(S, 3))
    assert rep.ok and rep.checked > rep.determined - 1
