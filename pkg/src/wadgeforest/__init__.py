"""Degrees of Q-valued functions named by nested labeled forests."""
from .errors import *  # noqa: F401,F403
from .evalred import eval_omega, run_transducer, synth_reduction
from .ordinal import OrdinalCNF, ord_cmp, parse_ordinal, print_ordinal
from .order import canon, equiv, is_join_irreducible, is_non_self_dual, leq
from .qspec import QuasiOrder, builtin, load_quasi_order, q_le
from .stream import PASS, drop_passes, mc_decode, mc_encode
from .term import Atom, Cat, Jump, Sum, chain, iota, parse_term, print_term, stats

__version__ = "0.1.0"
