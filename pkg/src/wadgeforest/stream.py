"""Finite streams over ``omega ∪ {pass}`` and the mind-change codec.

Symbols are plain non-negative ints or the :data:`PASS` sentinel. A finite
stream stands for itself followed by infinitely many passes.
"""
from __future__ import annotations

from typing import Iterable, Sequence, Union

from .errors import BadHead, ParseError

__all__ = ["PASS", "Symbol", "drop_passes", "mc_encode", "mc_decode", "parse_stream", "format_stream"]


class _Pass:
    __slots__ = ()

    def __repr__(self):
        return "PASS"

    def __reduce__(self):
        return "PASS"


PASS = _Pass()
Symbol = Union[int, _Pass]


def drop_passes(x: Iterable[Symbol]) -> tuple:
    return tuple(s for s in x if s is not PASS)


def mc_encode(y: Sequence[Symbol], z: Sequence[Symbol]) -> tuple:
    """Encode "output ``y``, then change mind and output ``z``".

    Nat entries of ``y`` are doubled and passes kept; a non-empty ``z``
    contributes the odd marker ``2*z[0] + 1`` followed by ``z[1:]`` verbatim.
    """
    out = [s if s is PASS else 2 * s for s in y]
    if z:
        if z[0] is PASS:
            raise BadHead("the stream after a mind change must start with a number")
        out.append(2 * z[0] + 1)
        out.extend(z[1:])
    return tuple(out)


def mc_decode(x: Sequence[Symbol]) -> tuple[tuple, tuple]:
    """Inverse of :func:`mc_encode`: split at the first odd symbol."""
    pi0 = []
    for i, s in enumerate(x):
        if s is PASS:
            pi0.append(PASS)
        elif s % 2 == 0:
            pi0.append(s // 2)
        else:
            return tuple(pi0), ((s - 1) // 2,) + tuple(x[i + 1:])
    return tuple(pi0), ()


def parse_stream(text: str) -> tuple:
    """Parse ``2,p,4,3,7`` (``p`` is pass). The empty string is the empty stream."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok == "p":
            out.append(PASS)
        elif tok.isdigit():
            out.append(int(tok))
        else:
            raise ParseError(f"bad stream symbol {tok!r}")
    return tuple(out)


def format_stream(x: Iterable[Symbol]) -> str:
    return ",".join("p" if s is PASS else str(s) for s in x)
