"""Sum-of-products synthesis of quaternary functions.

Form I writes every non-zero row as a weighted product of equality literals.
Form II splits the function into its low-bit and high-bit binary halves,
minimizes each half exactly and maps the binary literals back to quaternary
literals built from NOT and bitswap, masking the halves with weights 1 and 2.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence, Union

import numpy as np

from .algebra import DYADIC_TABLE, UNARY_TABLE, Op, check_qudit
from .function import InputVector, QFunction, input_matrix, qf_from_array, row_vector
from .minimize import BinaryFunction, Cube, minimize_binary

MAX_FORM2_ARITY = 6


class Form(enum.IntEnum):
    FORM1 = 1
    FORM2 = 2


class Half(enum.Enum):
    F0 = 1  # low bit, weight 1
    F1 = 2  # high bit, weight 2

    @property
    def weight(self) -> int:
        return self.value


class Shape(enum.Enum):
    PLAIN = "X"
    NOT = "N"
    SWAP = "S"
    SWAPNOT = "SN"
    INWARD = "I"
    OUTWARD = "O"

    def __lt__(self, other: "Shape") -> bool:
        order = list(Shape)
        return order.index(self) < order.index(other)


# Value of each literal shape as a lookup over the variable's value.
_SHAPE_TABLE = {
    Shape.PLAIN: np.arange(4, dtype=np.uint8),
    Shape.NOT: UNARY_TABLE[Op.NOT],
    Shape.SWAP: UNARY_TABLE[Op.BITSWAP],
    Shape.SWAPNOT: UNARY_TABLE[Op.BITSWAP][UNARY_TABLE[Op.NOT]],
    Shape.INWARD: UNARY_TABLE[Op.INWARD],
    Shape.OUTWARD: UNARY_TABLE[Op.OUTWARD],
}

_CLASHES = [(Shape.PLAIN, Shape.NOT), (Shape.SWAP, Shape.SWAPNOT)]


class SopError(ValueError):
    pass


class SopFormatError(SopError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


@dataclass(frozen=True, order=True)
class Form1Literal:
    """``E(X_var, constant)``: 3 where the variable equals the constant, else 0."""

    var: int
    constant: int

    def values(self, column: np.ndarray) -> np.ndarray:
        return np.where(column == self.constant, 3, 0).astype(np.uint8)

    def __str__(self) -> str:
        return f"E(X{self.var},{self.constant})"


@dataclass(frozen=True, order=True)
class Form2Literal:
    var: int
    shape: Shape

    def values(self, column: np.ndarray) -> np.ndarray:
        return _SHAPE_TABLE[self.shape][column]

    def __str__(self) -> str:
        if self.shape is Shape.PLAIN:
            return f"X{self.var}"
        return f"{self.shape.value}(X{self.var})"


Literal = Union[Form1Literal, Form2Literal]


def _product_values(literals, weight: int, x: np.ndarray, and_table: np.ndarray) -> np.ndarray:
    acc = np.full(x.shape[0], weight, dtype=np.uint8)
    for lit in literals:
        acc = and_table[acc, lit.values(x[:, lit.var - 1])]
    return acc


@dataclass(frozen=True)
class Form1Product:
    literals: tuple[Literal, ...]
    weight: int

    def __post_init__(self):
        if check_qudit(self.weight) == 0:
            raise SopError("zero-weight products are never emitted")
        vars_ = [lit.var for lit in self.literals]
        if len(set(vars_)) != len(vars_):
            raise SopError(f"form-I product has two literals on one variable: {self}")
        for lit in self.literals:
            if isinstance(lit, Form2Literal) and lit.shape not in (Shape.INWARD, Shape.OUTWARD):
                raise SopError(f"form-I products only take equality or inverter literals, got {lit}")

    def __str__(self) -> str:
        return " ".join(map(str, self.literals)) + f" . {self.weight}"


@dataclass(frozen=True)
class Form2Product:
    literals: tuple[Form2Literal, ...]
    weight: int

    def __post_init__(self):
        if check_qudit(self.weight) == 0:
            raise SopError("zero-weight products are never emitted")
        for a, b in _CLASHES:
            both = {lit.var for lit in self.literals if lit.shape is a} & {
                lit.var for lit in self.literals if lit.shape is b
            }
            if both:
                raise SopError(f"complementary literals on X{min(both)} in one product")

    def __str__(self) -> str:
        return " ".join(map(str, self.literals)) + f" . {self.weight}"


Product = Union[Form1Product, Form2Product]


@dataclass(frozen=True)
class Rewrite:
    """Record of one inverter substitution: ``rule`` applied on variable ``var``."""

    rule: str
    var: int
    merged: int


@dataclass(frozen=True)
class SopExpr:
    form: Form
    arity: int
    products: tuple[Product, ...]
    rewrites: tuple[Rewrite, ...] = ()
    minmax: bool = False

    def __post_init__(self):
        object.__setattr__(self, "form", Form(self.form))
        expected = Form1Product if self.form is Form.FORM1 else Form2Product
        for p in self.products:
            if not isinstance(p, expected):
                raise SopError(f"{self.form.name} expression cannot hold {type(p).__name__}")
            if any(not 1 <= lit.var <= self.arity for lit in p.literals):
                raise SopError(f"literal variable out of range 1..{self.arity} in {p}")
        if self.minmax and self.form is not Form.FORM1:
            raise SopError("MIN/MAX substitution is only valid for form-I")

    def __len__(self) -> int:
        return len(self.products)

    def __str__(self) -> str:
        return " + ".join(f"({p})" for p in self.products) or "0"


# -- evaluation -------------------------------------------------------------


def eval_sop_rows(e: SopExpr, x: np.ndarray) -> np.ndarray:
    """Evaluate over a ``(rows, arity)`` array of input vectors."""
    x = np.asarray(x, dtype=np.uint8)
    if x.ndim != 2 or x.shape[1] != e.arity:
        raise SopError(f"arity mismatch: expression takes {e.arity} inputs")
    and_table = DYADIC_TABLE[Op.MIN if e.minmax else Op.AND]
    or_table = DYADIC_TABLE[Op.MAX if e.minmax else Op.OR]
    acc = np.zeros(x.shape[0], dtype=np.uint8)
    for p in e.products:
        acc = or_table[acc, _product_values(p.literals, p.weight, x, and_table)]
    return acc


def eval_sop(e: SopExpr, x: Sequence[int]) -> int:
    if len(x) != e.arity:
        raise SopError(f"arity mismatch: expression takes {e.arity} inputs, got {len(x)}")
    row = np.array([[check_qudit(v) for v in x]], dtype=np.uint8)
    return int(eval_sop_rows(e, row)[0])


def sop_table(e: SopExpr) -> QFunction:
    """Exhaustive truth table of ``e``."""
    return qf_from_array(e.arity, eval_sop_rows(e, input_matrix(e.arity)))


# -- form I -------------------------------------------------------------------


def minterm_form1(v: InputVector, d: int) -> Form1Product:
    if check_qudit(d) == 0:
        raise SopError("min-term value must be 1, 2 or 3")
    return Form1Product(tuple(Form1Literal(i, check_qudit(c)) for i, c in enumerate(v, start=1)), d)


def synthesize_form1(f: QFunction) -> SopExpr:
    products = tuple(
        minterm_form1(row_vector(idx, f.arity), value)
        for idx, value in enumerate(f.outputs)
        if value
    )
    return SopExpr(Form.FORM1, f.arity, products)


def form1_use_minmax(e: SopExpr) -> SopExpr:
    """Mark a form-I expression for MIN/MAX in place of AND/OR."""
    if e.form is not Form.FORM1:
        raise SopError("MIN/MAX substitution is not valid for form-II")
    return replace(e, minmax=True)


# -- form II ------------------------------------------------------------------


def decompose_form2(f: QFunction) -> tuple[BinaryFunction, BinaryFunction]:
    """Split ``f`` into its low-bit half ``f0`` and high-bit half ``f1``.

    Binary variables are the bit pairs ``<x_i1, x_i0>`` concatenated with X1
    most significant, so a binary minterm index equals the quaternary row.
    """
    f0 = frozenset(i for i, v in enumerate(f.outputs) if v & 1)
    f1 = frozenset(i for i, v in enumerate(f.outputs) if v & 2)
    return BinaryFunction(2 * f.arity, f0), BinaryFunction(2 * f.arity, f1)


_F0_SHAPES = {(0, True): Shape.PLAIN, (0, False): Shape.NOT, (1, True): Shape.SWAP, (1, False): Shape.SWAPNOT}
_F1_SHAPES = {(0, True): Shape.SWAP, (0, False): Shape.SWAPNOT, (1, True): Shape.PLAIN, (1, False): Shape.NOT}


def transform_literals(products: Sequence[Cube], half: Half, arity: int) -> list[Form2Product]:
    """Map binary cubes of one half onto weighted quaternary products."""
    shapes = _F0_SHAPES if half is Half.F0 else _F1_SHAPES
    out = []
    for cube in products:
        lits = []
        for bit, positive in cube.literals():
            if bit >= 2 * arity:
                raise SopError(f"bit {bit} out of range for arity {arity}")
            var = arity - bit // 2
            lits.append(Form2Literal(var, shapes[(bit % 2, positive)]))
        out.append(Form2Product(tuple(sorted(lits)), half.weight))
    return out


def synthesize_form2(f: QFunction) -> SopExpr:
    if f.arity > MAX_FORM2_ARITY:
        raise SopError(
            f"form-II synthesis supports arity <= {MAX_FORM2_ARITY} (exact binary minimization); got {f.arity}"
        )
    f0, f1 = decompose_form2(f)
    products = transform_literals(minimize_binary(f0), Half.F0, f.arity)
    products += transform_literals(minimize_binary(f1), Half.F1, f.arity)
    return SopExpr(Form.FORM2, f.arity, tuple(products))


def synthesize(f: QFunction, form: Form | int) -> SopExpr:
    return synthesize_form1(f) if Form(form) is Form.FORM1 else synthesize_form2(f)


# -- .qsop text format ----------------------------------------------------------

_E_LIT = re.compile(r"^E\(X(\d+),([0-3])\)$")
_SHAPED_LIT = re.compile(r"^(N|S|SN|I|O)\(X(\d+)\)$")
_PLAIN_LIT = re.compile(r"^X(\d+)$")


def _parse_literal(tok: str, lineno: int) -> Literal:
    if m := _E_LIT.match(tok):
        return Form1Literal(int(m.group(1)), int(m.group(2)))
    if m := _SHAPED_LIT.match(tok):
        return Form2Literal(int(m.group(2)), Shape(m.group(1)))
    if m := _PLAIN_LIT.match(tok):
        return Form2Literal(int(m.group(1)), Shape.PLAIN)
    raise SopFormatError(f"unrecognised literal {tok!r}", lineno)


def dumps_qsop(e: SopExpr) -> str:
    lines = [f"form {int(e.form)}", f"vars {e.arity}"]
    if e.minmax:
        lines.append("minmax")
    for r in e.rewrites:
        lines.append(f"rewrite {r.rule} X{r.var} {r.merged}")
    for p in e.products:
        lines.append(" ".join([f"term {p.weight}", *map(str, p.literals)]))
    return "\n".join(lines) + "\n"


def loads_qsop(text: str) -> SopExpr:
    form = arity = None
    minmax = False
    rewrites: list[Rewrite] = []
    products: list[Product] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if form is None:
            if fields not in (["form", "1"], ["form", "2"]):
                raise SopFormatError("expected 'form 1' or 'form 2'", lineno)
            form = Form(int(fields[1]))
        elif arity is None:
            if len(fields) != 2 or fields[0] != "vars" or not fields[1].isdigit() or int(fields[1]) < 1:
                raise SopFormatError("expected 'vars <n>'", lineno)
            arity = int(fields[1])
        elif fields == ["minmax"]:
            minmax = True
        elif fields[0] == "rewrite":
            if len(fields) != 4 or not _PLAIN_LIT.match(fields[2]) or not fields[3].isdigit():
                raise SopFormatError("expected 'rewrite <rule> X<i> <count>'", lineno)
            rewrites.append(Rewrite(fields[1], int(fields[2][1:]), int(fields[3])))
        elif fields[0] == "term":
            if len(fields) < 2 or fields[1] not in ("1", "2", "3"):
                raise SopFormatError("expected 'term <weight> <literal> ...' with weight 1-3", lineno)
            lits = [_parse_literal(tok, lineno) for tok in fields[2:]]
            try:
                if form is Form.FORM1:
                    products.append(Form1Product(tuple(lits), int(fields[1])))
                else:
                    if any(isinstance(lit, Form1Literal) for lit in lits):
                        raise SopError("equality literals are not allowed in form-II")
                    products.append(Form2Product(tuple(lits), int(fields[1])))
            except SopError as exc:
                raise SopFormatError(str(exc), lineno) from None
        else:
            raise SopFormatError(f"unrecognised line {line!r}", lineno)
    if form is None or arity is None:
        raise SopFormatError("missing 'form' or 'vars' header")
    try:
        return SopExpr(form, arity, tuple(products), tuple(rewrites), minmax)
    except SopError as exc:
        raise SopFormatError(str(exc)) from None


def read_qsop(path: str | Path) -> SopExpr:
    return loads_qsop(Path(path).read_text())


def write_qsop(e: SopExpr, path: str | Path) -> None:
    Path(path).write_text(dumps_qsop(e))
