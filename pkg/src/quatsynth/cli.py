"""Command-line front end: ``quatsynth <subcommand> ...``.

Exit status is 0 on success (or equivalence for ``verify``), 1 when
``verify`` finds a mismatch and 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import algebra
from .algebra import Op
from .bounds import bound, worst_case_function
from .circuits import (
    EQUALITY_KINDS,
    CircuitKind,
    bitswap_from_equality,
    decoder,
    demux,
    equality_netlist,
    minmax_reference,
    mux,
    unary_equality,
)
from .function import TableFormatError, input_matrix, read_qtt, row_vector
from .lower import lower_sop
from .netlist import NetlistError, depth, dumps_qnet, gate_count, read_qnet, simulate, simulate_arrays
from .peephole import peephole_inverters
from .sop import SopError, dumps_qsop, eval_sop_rows, form1_use_minmax, read_qsop, synthesize

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fanin(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError(f"fan-in must be >= 2, got {v}")
    return v


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _report(line: str, output: str | None) -> None:
    # Keep stdout clean for the artifact when it is written there.
    print(line, file=sys.stdout if output else sys.stderr)


def cmd_tables(args) -> int:
    sys.stdout.write(algebra.render_tables())
    return EXIT_OK


def cmd_synth(args) -> int:
    f = read_qtt(args.input)
    e = synthesize(f, args.form)
    if args.peephole:
        e = peephole_inverters(e, args.v1, args.v2)
    if args.minmax:
        e = form1_use_minmax(e)
    _emit(dumps_qsop(e), args.output)
    _report(f"form {int(e.form)}: {len(e)} terms, {len(e.rewrites)} rewrites", args.output)
    return EXIT_OK


def cmd_lower(args) -> int:
    e = read_qsop(args.input)
    nl = lower_sop(e, args.v1, args.v2, expand_equality=args.expand_equality, use_minmax=args.use_minmax)
    _emit(dumps_qnet(nl), args.output)
    _report(f"gates={gate_count(nl)} depth={depth(nl)}", args.output)
    if not e.rewrites:
        n0, d0 = (5, 4) if args.expand_equality else (1, 1)
        report = bound(e.form, e.arity, args.v1, args.v2, n0, d0).measured(nl)
        _report(f"bounds {report}", args.output)
    return EXIT_OK


def _parse_bindings(pairs: list[str]) -> dict[str, int]:
    out = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        if not sep or value not in ("0", "1", "2", "3") or not name:
            raise UsageError(f"bad binding {pair!r}; expected NAME=<0-3>")
        out[name] = int(value)
    return out


def cmd_sim(args) -> int:
    nl = read_qnet(args.input)
    bindings = _parse_bindings(args.set or [])
    unknown = sorted(set(bindings) - set(nl.input_names))
    if unknown:
        raise UsageError(f"no input named {unknown[0]!r}")
    outputs = simulate(nl, bindings)
    print(" ".join(f"{name}={value}" for name, value in outputs.items()))
    return EXIT_OK


def cmd_verify(args) -> int:
    f = read_qtt(args.table)
    x = input_matrix(f.arity)
    if args.input.endswith(".qsop"):
        e = read_qsop(args.input)
        if e.arity != f.arity:
            raise UsageError(f"arity mismatch: expression has {e.arity} inputs, table {f.arity}")
        actual = eval_sop_rows(e, x)
    else:
        nl = read_qnet(args.input)
        names = nl.input_names
        if len(names) != f.arity:
            raise UsageError(f"arity mismatch: netlist has {len(names)} inputs, table {f.arity}")
        if args.output_name is None and len(nl.outputs) != 1:
            raise UsageError("netlist has several outputs; pass --output-name")
        out = args.output_name or next(iter(nl.outputs))
        if out not in nl.outputs:
            raise UsageError(f"no output named {out!r}")
        actual = simulate_arrays(nl, {name: x[:, i] for i, name in enumerate(names)})[out]
    expected = f.table
    bad = np.flatnonzero(actual != expected)
    if bad.size == 0:
        print(f"equivalent on all {4 ** f.arity} inputs")
        return EXIT_OK
    row = int(bad[0])
    vec = " ".join(str(v) for v in row_vector(row, f.arity))
    print(f"mismatch at input ({vec}): expected {expected[row]}, got {actual[row]}")
    return EXIT_MISMATCH


def cmd_bounds(args) -> int:
    report = bound(args.form, args.vars, args.v1, args.v2, args.n0, args.d0)
    if args.measure:
        f = worst_case_function(args.vars, args.form, args.seed)
        report = report.measured(lower_sop(synthesize(f, args.form), args.v1, args.v2))
    print(report)
    return EXIT_OK


def build_circuit(name: str, n: int, v1: int, v2: int, expand_equality: bool):
    kind = CircuitKind(name)
    if kind in EQUALITY_KINDS:
        return equality_netlist(kind, v1, v2)
    if kind is CircuitKind.EQ_ZERO:
        return unary_equality(0, v1, v2)
    if kind is CircuitKind.EQ_THREE:
        return unary_equality(3, v1, v2)
    if kind is CircuitKind.BITSWAP_FROM_EQ:
        return bitswap_from_equality(v1, v2)
    if kind is CircuitKind.DECODER:
        return decoder(n, v1, expand_equality)
    if kind is CircuitKind.DEMUX:
        return demux(n, v1, expand_equality)
    if kind is CircuitKind.MUX:
        return mux(n, v1, v2, expand_equality)
    which = Op.MIN if kind is CircuitKind.MIN_REF else Op.MAX
    return lower_sop(minmax_reference(which), v1, v2)


def cmd_circuit(args) -> int:
    nl = build_circuit(args.name, args.n, args.v1, args.v2, args.expand_equality)
    _emit(dumps_qnet(nl), args.output)
    _report(f"{args.name}: gates={gate_count(nl)} depth={depth(nl)}", args.output)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quatsynth", description="Quaternary logic synthesis toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def fanin(p):
        p.add_argument("--v1", type=_fanin, default=2, help="max AND/MIN fan-in")
        p.add_argument("--v2", type=_fanin, default=2, help="max OR/MAX fan-in")

    p = sub.add_parser("tables", help="print the operator truth tables")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("synth", help="synthesize a .qtt truth table into a .qsop expression")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--form", type=int, choices=(1, 2), default=2)
    p.add_argument("--peephole", action="store_true", help="substitute functional inverters")
    p.add_argument("--minmax", action="store_true", help="mark a form-I result for MIN/MAX")
    fanin(p)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("lower", help="lower a .qsop expression to a .qnet netlist")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--expand-equality", action="store_true")
    p.add_argument("--use-minmax", action="store_true")
    fanin(p)
    p.set_defaults(func=cmd_lower)

    p = sub.add_parser("sim", help="simulate a .qnet netlist for one input binding")
    p.add_argument("input")
    p.add_argument("--set", action="append", metavar="NAME=VALUE")
    p.set_defaults(func=cmd_sim)

    p = sub.add_parser("verify", help="check a .qnet or .qsop against a .qtt exhaustively")
    p.add_argument("input")
    p.add_argument("table")
    p.add_argument("--output-name")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="print gate-count and depth upper bounds")
    p.add_argument("--form", type=int, choices=(1, 2), required=True)
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--n0", type=int, default=1, help="gates per equality literal (form 1)")
    p.add_argument("--d0", type=int, default=1, help="depth of an equality literal (form 1)")
    p.add_argument("--measure", action="store_true", help="also lower the worst-case function")
    p.add_argument("--seed", type=int, default=0)
    fanin(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("circuit", help="emit a named circuit as .qnet")
    p.add_argument("name", choices=[k.value for k in CircuitKind])
    p.add_argument("-n", "--n", type=int, default=1, help="selector count")
    p.add_argument("-o", "--output")
    p.add_argument("--expand-equality", action="store_true")
    fanin(p)
    p.set_defaults(func=cmd_circuit)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, TableFormatError, SopError, NetlistError, OSError, ValueError) as exc:
        print(f"quatsynth {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
