"""Command-line interface.

Exit codes: 0 success, 1 negative answer (e.g. not reducible), 2 usage or
parse error, 3 internal inconsistency (oracle disagreement, unsound plan).
"""
from __future__ import annotations

import argparse
import os
import random
import sys

from . import explore, oracle, order
from .errors import NotReducible, WadgeError
from .evalred import check_soundness, eval_omega, format_plan, random_input, run_transducer, synth_reduction
from .ordinal import ord_cmp, parse_ordinal
from .qspec import resolve
from .stream import format_stream, parse_stream
from .term import parse_term, print_term

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUG = 0, 1, 2, 3


class _Bug(Exception):
    pass


def read_term(arg: str):
    """Inline literal unless a file exists at ``arg``; ``@path`` always reads a file."""
    if arg.startswith("@"):
        with open(arg[1:], encoding="utf-8") as fh:
            return parse_term(fh.read())
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return parse_term(fh.read())
    return parse_term(arg)


_SYM = {(True, True): "=", (True, False): "<", (False, True): ">", (False, False): "||"}


def cmd_compare(args):
    Q = resolve(args.q)
    S, T = read_term(args.S), read_term(args.T)
    rel = order.relation(Q, S, T)
    deciders = {"hom": oracle.hom_leq, "game": oracle.game_leq}
    names = list(deciders) if args.oracle == "all" else [args.oracle] if args.oracle else []
    for name in names:
        other = _SYM[deciders[name](Q, S, T), deciders[name](Q, T, S)]
        if other != rel:
            raise _Bug(f"oracle {name} disagrees: order says {rel}, {name} says {other}")
    print(rel)
    if args.witness:
        w = oracle.hom_witness(Q, S, T)
        if w is not None:
            print(oracle.format_witness(w))
    return EXIT_OK


def cmd_canon(args):
    Q = resolve(args.q)
    print(print_term(order.canon(Q, read_term(args.T))))
    return EXIT_OK


def cmd_selfdual(args):
    Q = resolve(args.q)
    irreducible = order.is_join_irreducible(Q, read_term(args.T))
    print("non-self-dual" if irreducible else "self-dual")
    return EXIT_OK


def cmd_eval(args):
    Q = resolve(args.q)
    print(eval_omega(Q, read_term(args.T), parse_stream(args.input)))
    return EXIT_OK


def cmd_reduce(args):
    Q = resolve(args.q)
    S, T = read_term(args.S), read_term(args.T)
    try:
        plan = synth_reduction(Q, S, T)
    except NotReducible as e:
        print(f"not reducible: {e}")
        return EXIT_NEGATIVE
    if args.show_plan or (args.input is None and not args.fuzz):
        print(format_plan(plan))
    if args.input is not None:
        x = parse_stream(args.input)
        y = run_transducer(plan, x)
        print(f"output: {format_stream(y)}")
        print(f"values: {eval_omega(Q, S, x)} -> {eval_omega(Q, T, y)}")
    if args.fuzz:
        if not args.show_plan:
            print(format_plan(plan))
        rng = random.Random(args.seed)
        xs = [random_input(S, rng.randint(0, args.max_len), rng) for _ in range(args.fuzz)]
        rep = check_soundness(Q, S, T, xs, plan)
        print(f"soundness: {rep.checked - len(rep.failures)}/{rep.checked}")
        if rep.failures:
            x, y, v, w = rep.failures[0]
            raise _Bug(f"unsound plan on input {format_stream(x)}: {v} -> {w} via {format_stream(y)}")
    return EXIT_OK


def cmd_enum(args):
    Q = resolve(args.q)
    jumps = [parse_ordinal(a) for a in args.jumps.split(",")] if args.jumps else []
    terms = explore.enum_terms(Q, args.max_nodes, jumps, cap=args.cap)
    for t in terms:
        print(print_term(t))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(explore.hasse(Q, terms, jobs=args.jobs))
    if args.tsv:
        with open(args.tsv, "w", encoding="utf-8") as fh:
            fh.write(explore.tsv_matrix(Q, terms, jobs=args.jobs))
    if args.report:
        for line in explore.structure_report(Q, terms, jobs=args.jobs).lines():
            print("# " + line)
    return EXIT_OK


def cmd_ord_cmp(args):
    c = ord_cmp(parse_ordinal(args.a), parse_ordinal(args.b))
    print(c.name)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wadgeforest", description="Degrees of Q-labeled nested forests.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_q(sp):
        sp.add_argument("--q", required=True, help="builtin (antichain:k, chain:k, flat3, diamond) or Q-file")
        return sp

    sp = with_q(sub.add_parser("compare", help="print <, >, = or ||"))
    sp.add_argument("S")
    sp.add_argument("T")
    sp.add_argument("--oracle", choices=["hom", "game", "all"])
    sp.add_argument("--witness", action="store_true", help="print the node map as 'path_in_S => path_in_T'")
    sp.set_defaults(func=cmd_compare)

    sp = with_q(sub.add_parser("canon", help="canonical representative"))
    sp.add_argument("T")
    sp.set_defaults(func=cmd_canon)

    sp = with_q(sub.add_parser("selfdual", help="self-dual or non-self-dual"))
    sp.add_argument("T")
    sp.set_defaults(func=cmd_selfdual)

    sp = with_q(sub.add_parser("eval", help="evaluate the complete function on a finite stream"))
    sp.add_argument("T")
    sp.add_argument("--input", required=True, help="e.g. 2,p,4,3,7 (p = pass)")
    sp.set_defaults(func=cmd_eval)

    sp = with_q(sub.add_parser("reduce", help="synthesize a reduction transducer"))
    sp.add_argument("S")
    sp.add_argument("T")
    sp.add_argument("--input")
    sp.add_argument("--show-plan", action="store_true")
    sp.add_argument("--fuzz", type=int, default=0, metavar="N")
    sp.add_argument("--max-len", type=int, default=8)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_reduce)

    sp = with_q(sub.add_parser("enum", help="enumerate degrees up to a node bound"))
    sp.add_argument("--max-nodes", type=int, required=True)
    sp.add_argument("--jumps", help="comma-separated jump heights, e.g. 0,1,w")
    sp.add_argument("--dot", help="write the Hasse diagram here")
    sp.add_argument("--tsv", help="write the pairwise comparison matrix here")
    sp.add_argument("--report", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--cap", type=int, default=explore.DEFAULT_CAP)
    sp.set_defaults(func=cmd_enum)

    sp = sub.add_parser("ord-cmp", help="compare two ordinals: LT, EQ or GT")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.set_defaults(func=cmd_ord_cmp)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except _Bug as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUG
    except NotReducible as e:
        print(f"not reducible: {e}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (WadgeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
