"""Command-line front end.

Exit status is 0 on success, 1 when a check suite finds a counterexample and
2 on unreadable or malformed input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from .checks import SUITES, run_suite
from .circuit import blackbox, boundary_names, circ_compose, circ_tensor
from .freeprop import SIGFLOW, TermError, dumps_term, interp_box, loads_term, translate_T, typecheck
from .kfield import ScalarError
from .linrel import ArityError
from .netlist import NetlistError, dump_netlist, parse_netlist

INPUT_ERROR = 2
CHECK_FAILED = 1


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load_circuit(path: str):
    try:
        return parse_netlist(_read(path))
    except NetlistError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_blackbox(args) -> int:
    circuit, sem = _load_circuit(args.netlist)
    rel = blackbox(circuit, sem)
    print(rel.to_text(boundary_names(circuit.m, circuit.n)))
    return 0


def _combine(args, op) -> int:
    f, _ = _load_circuit(args.f)
    g, _ = _load_circuit(args.g)
    try:
        out = op(f, g)
    except ArityError as exc:
        raise InputError(str(exc)) from None
    Path(args.out).write_text(dump_netlist(out))
    return 0


def cmd_compose(args) -> int:
    return _combine(args, circ_compose)


def cmd_tensor(args) -> int:
    return _combine(args, circ_tensor)


def _load_term(path: str):
    try:
        return loads_term(_read(path))
    except TermError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_translate(args) -> int:
    t = _load_term(args.term)
    try:
        print(dumps_term(translate_T(t)))
    except TermError as exc:
        raise InputError(f"{args.term}: {exc}") from None
    return 0


def cmd_eval(args) -> int:
    t = _load_term(args.term)
    try:
        typecheck(t, SIGFLOW)
    except TermError as exc:
        raise InputError(f"{args.term}: {exc}") from None
    rel = interp_box(t)
    print(f"relation {rel.dom} -> {rel.cod}, dimension {rel.dim}")
    text = rel.to_text()
    if text:
        print(text)
    return 0


def cmd_check(args) -> int:
    if args.cases is not None and args.cases < 1:
        raise InputError("--cases must be at least 1")
    report = run_suite(args.suite, args.seed, args.cases, jobs=args.jobs)
    for line in report.lines():
        print(line)
    return CHECK_FAILED if report.failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="propcirc", description="Compositional black-boxing of circuits.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("blackbox", help="print the relation a netlist imposes on its terminals")
    p.add_argument("netlist")
    p.set_defaults(func=cmd_blackbox)

    for name, func, help_ in (("compose", cmd_compose, "glue outputs of f to inputs of g"),
                              ("tensor", cmd_tensor, "place f and g side by side")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("f")
        p.add_argument("g")
        p.add_argument("-o", "--out", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("translate", help="rewrite a circuit term as a signal-flow term")
    p.add_argument("term")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("eval", help="evaluate a signal-flow term to a linear relation")
    p.add_argument("term")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="run a seeded property suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=None,
                   help="number of random cases (default 100; frobenius checks every law once)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else 0
    try:
        return args.func(args)
    except (InputError, ScalarError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
