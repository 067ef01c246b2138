"""Builders for named quaternary circuits.

Covers the equality realizations, the unary equality forms, bitswap built
from equality, the n-to-4**n decoder, the demultiplexer, the multiplexer and
the hand-derived MIN/MAX form-II expressions.
"""

from __future__ import annotations

import enum
from collections import Counter

from .algebra import Op
from .function import row_vector
from .netlist import Kind, Netlist, build_tree
from .sop import Form, Form2Literal, Form2Product, Shape, SopExpr


class CircuitKind(enum.Enum):
    EQUALITY_SOP = "equality-sop"
    EQUALITY_XNOR = "equality-xnor"
    EQUALITY_NOR = "equality-nor"
    EQUALITY_OUTWARD_AND = "equality-outward-and"
    EQUALITY_OUTWARD_OR = "equality-outward-or"
    EQ_ZERO = "eq-zero"
    EQ_THREE = "eq-three"
    BITSWAP_FROM_EQ = "bitswap-from-eq"
    DECODER = "decoder"
    DEMUX = "demux"
    MUX = "mux"
    MIN_REF = "min-ref"
    MAX_REF = "max-ref"


EQUALITY_KINDS = (
    CircuitKind.EQUALITY_SOP,
    CircuitKind.EQUALITY_XNOR,
    CircuitKind.EQUALITY_NOR,
    CircuitKind.EQUALITY_OUTWARD_AND,
    CircuitKind.EQUALITY_OUTWARD_OR,
)


def _equality_sop(nl: Netlist, a: int, b: int) -> int:
    # Sum of four products, one per value c: (A == c) . (B == c), each factor
    # written as a literal and its bitswap partner.
    def lits(x):
        inv = nl.add_gate(Kind.NOT, x)
        return {
            "n": inv,
            "sn": nl.add_gate(Kind.BITSWAP, inv),
            "p": x,
            "s": nl.add_gate(Kind.BITSWAP, x),
        }

    la, lb = lits(a), lits(b)
    products = [
        build_tree(Kind.AND, [la[s], la[p], lb[s], lb[p]], nl.v1, nl)
        for s, p in (("sn", "n"), ("sn", "p"), ("s", "n"), ("s", "p"))
    ]
    return build_tree(Kind.OR, products, nl.v2, nl)


def equality_into(nl: Netlist, variant: CircuitKind, a: int, b: int) -> int:
    """Add one two-input equality of the given realization to ``nl``."""
    if variant is CircuitKind.EQUALITY_SOP:
        return _equality_sop(nl, a, b)
    if variant is CircuitKind.EQUALITY_XNOR:
        xn = nl.add_gate(Kind.XNOR, a, b)
        return nl.add_gate(Kind.AND, xn, nl.add_gate(Kind.BITSWAP, xn))
    x = nl.add_gate(Kind.XOR, a, b)
    swapped = nl.add_gate(Kind.BITSWAP, x)
    if variant is CircuitKind.EQUALITY_NOR:
        return nl.add_gate(Kind.NOR, x, swapped)
    if variant is CircuitKind.EQUALITY_OUTWARD_AND:
        return nl.add_gate(Kind.AND, nl.add_gate(Kind.OUTWARD, x), nl.add_gate(Kind.OUTWARD, swapped))
    if variant is CircuitKind.EQUALITY_OUTWARD_OR:
        return nl.add_gate(Kind.OUTWARD, nl.add_gate(Kind.OR, x, swapped))
    raise ValueError(f"{variant} is not an equality realization")


def equality_netlist(variant: CircuitKind, v1: int = 2, v2: int = 2) -> Netlist:
    nl = Netlist(v1, v2)
    a, b = nl.add_input("A"), nl.add_input("B")
    nl.set_output("E", equality_into(nl, variant, a, b))
    return nl


def unary_equality(c: int, v1: int = 2, v2: int = 2) -> Netlist:
    """``E(A, c)``: NOR with the bitswap for 0, AND with the bitswap for 3, else an EQ gate."""
    nl = Netlist(v1, v2)
    a = nl.add_input("A")
    if c == 0:
        out = nl.add_gate(Kind.NOR, a, nl.add_gate(Kind.BITSWAP, a))
    elif c == 3:
        out = nl.add_gate(Kind.AND, a, nl.add_gate(Kind.BITSWAP, a))
    elif c in (1, 2):
        out = nl.add_gate(Kind.EQ, a, nl.const(c))
    else:
        raise ValueError(f"constant must be a qudit, got {c}")
    nl.set_output("E", out)
    return nl


def bitswap_from_equality(v1: int = 2, v2: int = 2) -> Netlist:
    """``~A = A^1.2 + A^2.1 + A^3`` from EQ, AND and OR gates only."""
    nl = Netlist(v1, v2)
    a = nl.add_input("A")
    terms = [
        nl.add_gate(Kind.AND, nl.add_gate(Kind.EQ, a, nl.const(1)), nl.const(2)),
        nl.add_gate(Kind.AND, nl.add_gate(Kind.EQ, a, nl.const(2)), nl.const(1)),
        nl.add_gate(Kind.EQ, a, nl.const(3)),
    ]
    nl.set_output("F", build_tree(Kind.OR, terms, v2, nl))
    return nl


# -- decoder family -----------------------------------------------------------


def selector_names(n: int) -> list[str]:
    return ["S"] if n == 1 else [f"S{i}" for i in range(1, n + 1)]


def _selector_literal(nl: Netlist, s: int, c: int, expand: bool, swaps: dict) -> int:
    if not expand:
        return nl.add_gate(Kind.EQ, s, nl.const(c))
    if c in (1, 2):
        xn = nl.add_gate(Kind.XNOR, s, nl.const(c))
        return nl.add_gate(Kind.AND, xn, nl.add_gate(Kind.BITSWAP, xn))
    if s not in swaps:
        swaps[s] = nl.add_gate(Kind.BITSWAP, s)
    kind = Kind.NOR if c == 0 else Kind.AND
    return nl.add_gate(kind, s, swaps[s])


def _decoder_core(nl: Netlist, n: int, expand_equality: bool):
    """Add selector inputs and the 4n shared literals ``S_i == c``."""
    selectors = [nl.add_input(name) for name in selector_names(n)]
    swaps: dict = {}
    literals = {
        (i, c): _selector_literal(nl, s, c, expand_equality, swaps)
        for i, s in enumerate(selectors)
        for c in range(4)
    }
    return selectors, literals


def decoder(n: int, v1: int = 2, expand_equality: bool = False, and_kind: Op = Op.AND) -> Netlist:
    """n-to-4**n decoder: output ``L<j>`` is 3 iff the selectors spell ``j`` in base 4."""
    if n < 1:
        raise ValueError(f"selector count must be >= 1, got {n}")
    nl = Netlist(v1, 2)
    _, literals = _decoder_core(nl, n, expand_equality)
    for j in range(4 ** n):
        leaves = [literals[(i, c)] for i, c in enumerate(row_vector(j, n))]
        nl.set_output(f"L{j}", build_tree(and_kind, leaves, v1, nl))
    return nl


def demux(n: int, v1: int = 2, expand_equality: bool = False, and_kind: Op = Op.AND) -> Netlist:
    """Decoder whose output lines are ANDed with the data input ``D``."""
    if n < 1:
        raise ValueError(f"selector count must be >= 1, got {n}")
    nl = Netlist(v1, 2)
    _, literals = _decoder_core(nl, n, expand_equality)
    d = nl.add_input("D")
    for j in range(4 ** n):
        leaves = [literals[(i, c)] for i, c in enumerate(row_vector(j, n))] + [d]
        nl.set_output(f"L{j}", build_tree(and_kind, leaves, v1, nl))
    return nl


def mux(
    n: int,
    v1: int = 2,
    v2: int = 2,
    expand_equality: bool = False,
    use_minmax: bool = False,
) -> Netlist:
    """4**n-to-1 multiplexer: ``M = OR_j (D<j> . AND_i E(S_i, digit_i(j)))``."""
    if n < 1:
        raise ValueError(f"selector count must be >= 1, got {n}")
    nl = Netlist(v1, v2)
    _, literals = _decoder_core(nl, n, expand_equality)
    data = [nl.add_input(f"D{j}") for j in range(4 ** n)]
    and_kind, or_kind = (Op.MIN, Op.MAX) if use_minmax else (Op.AND, Op.OR)
    terms = [
        build_tree(and_kind, [literals[(i, c)] for i, c in enumerate(row_vector(j, n))] + [data[j]], v1, nl)
        for j in range(4 ** n)
    ]
    nl.set_output("M", build_tree(or_kind, terms, v2, nl))
    return nl


def compound_tally(nl: Netlist) -> Counter:
    """Count gates, folding ``AND(x, ~x)`` with a private bitswap into one ``BITSWAP_AND``."""
    consumers = Counter(i for g in nl.gates for i in g.inputs)
    tally = Counter()
    folded = set()
    for g in nl.gates:
        if g.kind is Kind.AND and len(g.inputs) == 2:
            x, y = g.inputs
            for src, swap in ((x, y), (y, x)):
                sg = nl.gates[swap]
                if sg.kind is Kind.BITSWAP and sg.inputs == (src,):
                    tally["BITSWAP_AND"] += 1
                    if consumers[swap] == 1:
                        folded.add(swap)
                    break
            else:
                tally["AND"] += 1
        elif g.kind.is_logic:
            tally[g.kind.name] += 1
    tally["BITSWAP"] -= len(folded)
    return +tally


# -- MIN / MAX reference expressions ------------------------------------------


def _p(weight: int, *lits: tuple[int, Shape]) -> Form2Product:
    return Form2Product(tuple(Form2Literal(v, s) for v, s in lits), weight)


def minmax_reference(which: Op) -> SopExpr:
    """Hand-derived form-II expressions of MIN and MAX over ``A = X1``, ``B = X2``."""
    A, B = 1, 2
    P, N, S, SN = Shape.PLAIN, Shape.NOT, Shape.SWAP, Shape.SWAPNOT
    if which is Op.MIN:
        # (A.B + ~A.~NOT(B).B + ~B.~NOT(A).A).1 + (A.B).2
        products = (
            _p(1, (A, P), (B, P)),
            _p(1, (A, S), (B, SN), (B, P)),
            _p(1, (B, S), (A, SN), (A, P)),
            _p(2, (A, P), (B, P)),
        )
    elif which is Op.MAX:
        # (~A.A + ~B.B + ~NOT(A).B + ~NOT(B).A).1 + (A + B).2
        products = (
            _p(1, (A, S), (A, P)),
            _p(1, (B, S), (B, P)),
            _p(1, (A, SN), (B, P)),
            _p(1, (B, SN), (A, P)),
            _p(2, (A, P)),
            _p(2, (B, P)),
        )
    else:
        raise ValueError(f"no reference expression for {which}")
    return SopExpr(Form.FORM2, 2, products)
