import itertools

import pytest
from hypothesis import given, strategies as st

from wadgeforest.errors import ParseError, UnknownBuiltin, UnknownElement
from wadgeforest.qspec import QuasiOrder, builtin, dump_quasi_order, load_quasi_order, q_le


def test_antichain_from_file():
    Q = load_quasi_order("ELEMS: 0 1\n")
    assert Q.elements == ("0", "1")
    assert not q_le(Q, "0", "1") and not q_le(Q, "1", "0")
    assert q_le(Q, "0", "0")


def test_single_element():
    Q = load_quasi_order("ELEMS: a")
    assert q_le(Q, "a", "a")


def test_partial_function_order():
    Q = load_quasi_order("# flat order\nELEMS: bot 0 1\nLE: bot 0\nLE: bot 1  # bottom below both\n")
    assert q_le(Q, "bot", "1") and q_le(Q, "bot", "0")
    assert not q_le(Q, "0", "1") and not q_le(Q, "1", "bot")
    assert Q == builtin("flat3")


def test_closure_is_transitive():
    Q = load_quasi_order("ELEMS: a b c d\nLE: a b\nLE: b c\nLE: c d")
    assert q_le(Q, "a", "d")
    assert not q_le(Q, "d", "a")


def test_cycles_are_accepted():
    Q = load_quasi_order("ELEMS: a b\nLE: a b\nLE: b a")
    assert q_le(Q, "a", "b") and q_le(Q, "b", "a")


@pytest.mark.parametrize("text", [
    "LE: a b\nELEMS: a b",
    "ELEMS:",
    "ELEMS: a\nLE: a",
    "ELEMS: a\nGE: a a",
    "nonsense",
    "",
    "ELEMS: a a",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        load_quasi_order(text)


def test_unknown_element():
    with pytest.raises(UnknownElement):
        load_quasi_order("ELEMS: a\nLE: a b")
    with pytest.raises(UnknownElement):
        q_le(builtin("chain:2"), "0", "7")


def test_builtins():
    assert builtin("antichain:2").elements == ("0", "1")
    assert len(builtin("chain:1")) == 1
    c3 = builtin("chain:3")
    assert q_le(c3, "0", "2") and not q_le(c3, "2", "1")
    f = builtin("flat3")
    assert q_le(f, "bot", "0") and q_le(f, "bot", "1") and not q_le(f, "0", "1")
    d = builtin("diamond")
    assert q_le(d, "bot", "top") and not q_le(d, "a", "b")


@pytest.mark.parametrize("name", ["antichain:0", "chain:x", "cube", "antichain", "chain:-1"])
def test_unknown_builtin(name):
    with pytest.raises(UnknownBuiltin):
        builtin(name)


relations = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12).map(
        lambda ps: (n, ps)))


@given(relations)
def test_closure_laws_and_dump_roundtrip(nps):
    n, ps = nps
    elems = [f"e{i}" for i in range(n)]
    Q = QuasiOrder.from_pairs(elems, [(elems[a], elems[b]) for a, b in ps])
    for a in elems:
        assert q_le(Q, a, a)
    for a, b, c in itertools.product(elems, repeat=3):
        if q_le(Q, a, b) and q_le(Q, b, c):
            assert q_le(Q, a, c)
    for a, b in ps:
        assert q_le(Q, elems[a], elems[b])
    text = dump_quasi_order(Q)
    assert load_quasi_order(text) == Q
    assert dump_quasi_order(load_quasi_order(text)) == text
