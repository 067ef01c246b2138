"""Completely specified quaternary functions stored as truth tables.

Rows are in canonical order: the row of input vector ``(X1, ..., Xn)`` is
``sum(X_i * 4**(n - i))``, so ``X1`` is the most significant digit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterator, Sequence

import numpy as np

from .algebra import check_qudit

InputVector = tuple[int, ...]


class TableFormatError(ValueError):
    """Malformed ``.qtt`` text; ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


class EvaluationError(RuntimeError):
    def __init__(self, vector: InputVector, cause: BaseException):
        self.vector = vector
        super().__init__(f"evaluator failed at input {vector}: {cause}")


@dataclass(frozen=True)
class QFunction:
    arity: int
    outputs: tuple[int, ...]

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError(f"arity must be >= 1, got {self.arity}")
        expected = 4 ** self.arity
        if len(self.outputs) != expected:
            raise ValueError(
                f"truth table length mismatch: expected {expected}, got {len(self.outputs)}"
            )
        object.__setattr__(self, "outputs", tuple(check_qudit(v) for v in self.outputs))

    @property
    def table(self) -> np.ndarray:
        return np.array(self.outputs, dtype=np.uint8)

    def __call__(self, *x: int) -> int:
        return qf_eval(self, x)


@dataclass(frozen=True)
class MintermPartition:
    v1: tuple[InputVector, ...]
    v2: tuple[InputVector, ...]
    v3: tuple[InputVector, ...]

    def by_value(self, d: int) -> tuple[InputVector, ...]:
        return (self.v1, self.v2, self.v3)[d - 1]


def qf_from_rows(n: int, outputs: Sequence[int]) -> QFunction:
    return QFunction(n, tuple(int(v) for v in outputs))


def row_index(x: Sequence[int]) -> int:
    idx = 0
    for v in x:
        idx = 4 * idx + check_qudit(v)
    return idx


def row_vector(index: int, n: int) -> InputVector:
    """Inverse of :func:`row_index` for arity ``n``."""
    return tuple((index >> (2 * (n - 1 - i))) & 3 for i in range(n))


def input_vectors(n: int) -> Iterator[InputVector]:
    """All ``4**n`` input vectors in canonical row order."""
    return itertools.product(range(4), repeat=n)


@lru_cache(maxsize=16)
def input_matrix(n: int) -> np.ndarray:
    """``(4**n, n)`` array of every input vector, canonical order; read-only."""
    m = np.array(list(input_vectors(n)), dtype=np.uint8).reshape(4 ** n, n)
    m.setflags(write=False)
    return m


def qf_eval(f: QFunction, x: Sequence[int]) -> int:
    if len(x) != f.arity:
        raise ValueError(f"arity mismatch: function takes {f.arity} inputs, got {len(x)}")
    return f.outputs[row_index(x)]


def partition_minterms(f: QFunction) -> MintermPartition:
    groups: dict[int, list[InputVector]] = {1: [], 2: [], 3: []}
    for idx, value in enumerate(f.outputs):
        if value:
            groups[value].append(row_vector(idx, f.arity))
    return MintermPartition(tuple(groups[1]), tuple(groups[2]), tuple(groups[3]))


def qf_random(n: int, seed: int) -> QFunction:
    """Seeded random table: ``numpy.random.default_rng(seed).integers(0, 4, 4**n)``."""
    if n < 1:
        raise ValueError(f"arity must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    return QFunction(n, tuple(int(v) for v in rng.integers(0, 4, size=4 ** n)))


def qf_of_evaluator(n: int, evaluate: Callable[[InputVector], int]) -> QFunction:
    """Tabulate ``evaluate`` over every input vector of arity ``n``."""
    outputs = []
    for x in input_vectors(n):
        try:
            outputs.append(check_qudit(evaluate(x)))
        except Exception as exc:
            raise EvaluationError(x, exc) from exc
    return QFunction(n, tuple(outputs))


def qf_from_array(n: int, values: np.ndarray) -> QFunction:
    return QFunction(n, tuple(int(v) for v in np.asarray(values).ravel()))


# -- .qtt text format -------------------------------------------------------


def dumps_qtt(f: QFunction) -> str:
    lines = [f"vars {f.arity}"]
    for x, value in zip(input_vectors(f.arity), f.outputs):
        lines.append(" ".join(str(v) for v in x) + f" {value}")
    return "\n".join(lines) + "\n"


def loads_qtt(text: str) -> QFunction:
    if text and not text.endswith("\n"):
        raise TableFormatError("missing trailing newline")
    n = None
    outputs: list[int] = []
    for lineno, line in enumerate(text.split("\n")[:-1], start=1):
        if line.startswith("#"):
            continue
        fields = line.split(" ")
        if n is None:
            if len(fields) != 2 or fields[0] != "vars" or not fields[1].isdigit():
                raise TableFormatError(f"expected 'vars <n>', got {line!r}", lineno)
            n = int(fields[1])
            if n < 1:
                raise TableFormatError("arity must be >= 1", lineno)
            continue
        if len(fields) != n + 1 or any(tok not in ("0", "1", "2", "3") for tok in fields):
            raise TableFormatError(f"expected {n + 1} base-4 digits, got {line!r}", lineno)
        digits = [int(tok) for tok in fields]
        row = len(outputs)
        if row >= 4 ** n:
            raise TableFormatError(f"more than {4 ** n} data lines", lineno)
        if row_index(digits[:-1]) != row:
            raise TableFormatError(
                f"row out of canonical order: expected {' '.join(map(str, row_vector(row, n)))}",
                lineno,
            )
        outputs.append(digits[-1])
    if n is None:
        raise TableFormatError("empty table")
    if len(outputs) != 4 ** n:
        raise TableFormatError(f"expected {4 ** n} data lines, got {len(outputs)}")
    return QFunction(n, tuple(outputs))


def read_qtt(path: str | Path) -> QFunction:
    return loads_qtt(Path(path).read_text())


def write_qtt(f: QFunction, path: str | Path) -> None:
    Path(path).write_text(dumps_qtt(f))
