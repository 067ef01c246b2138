"""Worst-case gate count and depth of lowered SOP expressions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .function import QFunction
from .netlist import Netlist, ceil_log, depth, gate_count
from .sop import Form

# Worst case for form-I at arity 2: only 1s and 2s, no two rows or columns alike.
# Indexed [X1][X2].
FORM1_WORST_2 = (
    (2, 1, 2, 1),
    (1, 2, 1, 2),
    (2, 1, 1, 2),
    (1, 2, 2, 1),
)

# Depth of the deepest form-II literal: bitswap after NOT.
FORM2_LITERAL_DEPTH = 2


@dataclass(frozen=True)
class BoundsReport:
    n_bound: int
    d_bound: int
    n_actual: int | None = None
    d_actual: int | None = None

    def measured(self, nl: Netlist) -> "BoundsReport":
        return BoundsReport(self.n_bound, self.d_bound, gate_count(nl), depth(nl))

    @property
    def holds(self) -> bool:
        if self.n_actual is None or self.d_actual is None:
            raise ValueError("report has no measured values")
        return self.n_actual <= self.n_bound and self.d_actual <= self.d_bound

    def __str__(self) -> str:
        text = f"N={self.n_bound} d={self.d_bound}"
        if self.n_actual is not None:
            text += f" measured_N={self.n_actual} measured_d={self.d_actual}"
        return text


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check(n: int, v1: int, v2: int) -> None:
    if n < 1:
        raise ValueError(f"arity must be >= 1, got {n}")
    if v1 < 2 or v2 < 2:
        raise ValueError(f"fan-in limits must be >= 2, got v1={v1}, v2={v2}")


def bound_form2(n: int, v1: int, v2: int) -> BoundsReport:
    _check(n, v1, v2)
    half_terms = 2 ** (2 * n - 1)
    count = (
        3 * n
        + 2 ** (2 * n) * _ceil_div(2 * n - 1, v1 - 1)
        + 2 * _ceil_div(half_terms - 1, v2 - 1)
        + 3
    )
    d = FORM2_LITERAL_DEPTH + ceil_log(v1, 2 * n) + ceil_log(v2, half_terms) + 2
    return BoundsReport(count, d)


def bound_form1(n: int, v1: int, v2: int, n0: int = 1, d0: int = 1) -> BoundsReport:
    """``n0``/``d0`` are the gate count and depth of one equality literal."""
    _check(n, v1, v2)
    rows = 4 ** n
    count = 4 * n * n0 + rows * _ceil_div(n, v1 - 1) + _ceil_div(rows - 1, v2 - 1)
    d = d0 + ceil_log(v1, n + 1) + ceil_log(v2, rows)
    return BoundsReport(count, d)


def bound(form: Form | int, n: int, v1: int, v2: int, n0: int = 1, d0: int = 1) -> BoundsReport:
    if Form(form) is Form.FORM1:
        return bound_form1(n, v1, v2, n0, d0)
    return bound_form2(n, v1, v2)


def worst_case_function(n: int, form: Form | int, seed: int = 0) -> QFunction:
    """Function maximizing the lowered size of the given SOP form.

    Form II: both binary halves are the parity of the ``2n``-bit input index
    (a checkerboard K-map), so the value is 3 on odd-parity rows and 0 elsewhere.
    Form I: every row is 1 or 2; arity 2 returns the fixed table above, other
    arities draw from ``numpy.random.default_rng(seed)``.
    """
    if n < 1:
        raise ValueError(f"arity must be >= 1, got {n}")
    if Form(form) is Form.FORM2:
        return QFunction(n, tuple(3 * (bin(i).count("1") & 1) for i in range(4 ** n)))
    if n == 2:
        return QFunction(2, tuple(v for row in FORM1_WORST_2 for v in row))
    rng = np.random.default_rng(seed)
    return QFunction(n, tuple(int(v) for v in rng.integers(1, 3, size=4 ** n)))
