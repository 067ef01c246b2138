"""Quaternary operators over packed-binary qudits.

A qudit ``A`` in ``{0, 1, 2, 3}`` is the bit pair ``<a1, a0>`` with value
``2*a1 + a0``.  AND, OR, XOR and NOT act bitwise on the pair, bitswap
exchanges the two bits, and the functional inverters are derived from the
high bit only.
"""

from __future__ import annotations

import enum

import numpy as np

QUDITS = (0, 1, 2, 3)


class Op(enum.Enum):
    AND = "AND"
    OR = "OR"
    NOT = "NOT"
    BITSWAP = "BITSWAP"
    XOR = "XOR"
    XNOR = "XNOR"
    EQ = "EQ"
    INWARD = "INWARD"
    OUTWARD = "OUTWARD"
    MIN = "MIN"
    MAX = "MAX"
    NAND = "NAND"
    NOR = "NOR"

    @property
    def unary(self) -> bool:
        return self in UNARY_OPS


UNARY_OPS = frozenset({Op.NOT, Op.BITSWAP, Op.INWARD, Op.OUTWARD})
DYADIC_OPS = frozenset(Op) - UNARY_OPS


def check_qudit(value: int) -> int:
    """Return ``value`` unchanged if it is a qudit, otherwise raise ValueError."""
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise TypeError(f"qudit must be an integer, got {value!r}")
    if not 0 <= value <= 3:
        raise ValueError(f"qudit out of range 0..3: {value}")
    return int(value)


def pack(a1: int, a0: int) -> int:
    if a1 not in (0, 1) or a0 not in (0, 1):
        raise ValueError(f"bits must be 0 or 1, got ({a1}, {a0})")
    return 2 * a1 + a0


def unpack(q: int) -> tuple[int, int]:
    q = check_qudit(q)
    return q >> 1, q & 1


def is_symmetric(a: int) -> bool:
    a1, a0 = unpack(a)
    return a1 == a0


def _not(a: int) -> int:
    return 3 - a


def _bitswap(a: int) -> int:
    a1, a0 = unpack(a)
    return pack(a0, a1)


def _outward(a: int) -> int:
    a1, _ = unpack(a)
    return pack(1 - a1, 1 - a1)


def _inward(a: int) -> int:
    a1, _ = unpack(a)
    return pack(1 - a1, a1)


_UNARY = {
    Op.NOT: _not,
    Op.BITSWAP: _bitswap,
    Op.OUTWARD: _outward,
    Op.INWARD: _inward,
}

_DYADIC = {
    Op.AND: lambda a, b: a & b,
    Op.OR: lambda a, b: a | b,
    Op.XOR: lambda a, b: a ^ b,
    Op.XNOR: lambda a, b: 3 - (a ^ b),
    Op.NAND: lambda a, b: 3 - (a & b),
    Op.NOR: lambda a, b: 3 - (a | b),
    Op.EQ: lambda a, b: 3 if a == b else 0,
    Op.MIN: min,
    Op.MAX: max,
}


def apply_unary(op: Op, a: int) -> int:
    if op not in _UNARY:
        raise ValueError(f"{op.name} is not a unary operator")
    return _UNARY[op](check_qudit(a))


def apply_dyadic(op: Op, a: int, b: int) -> int:
    if op not in _DYADIC:
        raise ValueError(f"{op.name} is not a dyadic operator")
    return _DYADIC[op](check_qudit(a), check_qudit(b))


def apply(op: Op, *args: int) -> int:
    """Apply ``op`` to one or two qudits, dispatching on arity."""
    if op.unary:
        (a,) = args
        return apply_unary(op, a)
    a, b = args
    return apply_dyadic(op, a, b)


# Lookup tables for vectorised evaluation: UNARY_TABLE[op][a], DYADIC_TABLE[op][a, b].
UNARY_TABLE = {
    op: np.array([fn(a) for a in QUDITS], dtype=np.uint8) for op, fn in _UNARY.items()
}
DYADIC_TABLE = {
    op: np.array([[fn(a, b) for b in QUDITS] for a in QUDITS], dtype=np.uint8)
    for op, fn in _DYADIC.items()
}

# Associative dyadic operators that may take more than two inputs as one gate.
VARIADIC_OPS = frozenset({Op.AND, Op.OR, Op.MIN, Op.MAX})

SYMBOLS = {
    Op.NOT: "NOT(A)",
    Op.OUTWARD: "!A",
    Op.BITSWAP: "~A",
    Op.INWARD: "A'",
    Op.AND: "A.B",
    Op.OR: "A+B",
    Op.XOR: "A^B",
    Op.XNOR: "NOT(A^B)",
    Op.EQ: "E(A,B)",
    Op.MIN: "MIN(A,B)",
    Op.MAX: "MAX(A,B)",
    Op.NAND: "NOT(A.B)",
    Op.NOR: "NOT(A+B)",
}

# Row order of the operator table: the ten unordered operand pairs.
TABLE_PAIRS = [(a, b) for a in QUDITS for b in QUDITS if a <= b]
TABLE_ORDER = [
    Op.NOT, Op.OUTWARD, Op.BITSWAP, Op.INWARD,
    Op.AND, Op.OR, Op.XOR, Op.EQ, Op.MIN, Op.MAX,
    Op.XNOR, Op.NAND, Op.NOR,
]


def render_tables() -> str:
    """Render every operator as one row over the ten unordered operand pairs."""
    width = max(len(f"{op.name} {SYMBOLS[op]}") for op in TABLE_ORDER)
    lines = [
        "A".rjust(width) + " | " + " ".join(str(a) for a, _ in TABLE_PAIRS),
        "B".rjust(width) + " | " + " ".join(str(b) for _, b in TABLE_PAIRS),
        "-" * (width + 3 + 2 * len(TABLE_PAIRS) - 1),
    ]
    for op in TABLE_ORDER:
        label = f"{op.name} {SYMBOLS[op]}".rjust(width)
        values = [apply(op, a) if op.unary else apply(op, a, b) for a, b in TABLE_PAIRS]
        lines.append(label + " | " + " ".join(str(v) for v in values))
    return "\n".join(lines) + "\n"
