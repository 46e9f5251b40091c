import pytest
from hypothesis import given, strategies as st

from wadgeforest.errors import BadHead, ParseError
from wadgeforest.stream import PASS, drop_passes, format_stream, mc_decode, mc_encode, parse_stream

p = PASS
symbols = st.one_of(st.just(PASS), st.integers(0, 50))
streams = st.lists(symbols, max_size=12).map(tuple)
heads = st.integers(0, 50)


def test_drop_passes():
    assert drop_passes((p, 3, p, 0)) == (3, 0)
    assert drop_passes((p, p)) == ()
    assert drop_passes((1, 2, 3)) == (1, 2, 3)


def test_encode_examples():
    assert mc_encode((1, p, 2), (1, 7)) == (2, p, 4, 3, 7)
    assert mc_encode((), (0,)) == (1,)
    assert mc_encode((5,), ()) == (10,)
    with pytest.raises(BadHead):
        mc_encode((1,), (p, 3))


def test_decode_examples():
    assert mc_decode((2, p, 4, 3, 7)) == ((1, p, 2), (1, 7))
    assert mc_decode((p, p, p)) == ((p, p, p), ())
    assert mc_decode((3,)) == ((), (1,))
    assert mc_decode(()) == ((), ())


@given(streams, st.one_of(st.just(()), st.tuples(heads).flatmap(lambda h: streams.map(lambda r: h + r))))
def test_decode_inverts_encode(y, z):
    assert mc_decode(mc_encode(y, z)) == (y, z)


@given(st.lists(st.one_of(st.just(PASS), st.integers(0, 25).map(lambda k: 2 * k)), max_size=8), streams)
def test_encode_inverts_decode(prefix, rest):
    # any stream whose pre-marker part is even-or-pass
    for x in (tuple(prefix), tuple(prefix) + (7,) + rest):
        assert mc_encode(*mc_decode(x)) == x


@given(streams)
def test_doubling(y):
    assert drop_passes(mc_encode(y, ())) == tuple(2 * s for s in drop_passes(y))


def test_literal_syntax():
    assert parse_stream("2,p,4,3,7") == (2, p, 4, 3, 7)
    assert parse_stream("") == ()
    assert parse_stream(" p , 1 ") == (p, 1)
    assert format_stream((2, p, 4)) == "2,p,4"
    with pytest.raises(ParseError):
        parse_stream("1,x")
    with pytest.raises(ParseError):
        parse_stream("1,,2")


@given(streams)
def test_literal_roundtrip(x):
    assert parse_stream(format_stream(x)) == x
