"""Gate-level netlists of quaternary operators.

Gates are stored in a list indexed by id; every gate only reads gates with a
smaller id, so the list order is a topological order.  AND/MIN gates may
take up to ``v1`` inputs and OR/MAX gates up to ``v2``.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .algebra import DYADIC_TABLE, UNARY_TABLE, Op, check_qudit
from .function import QFunction, input_matrix, qf_from_array


class Kind(enum.Enum):
    INPUT = "INPUT"
    CONST = "CONST"
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
    def op(self) -> Op:
        return _OP_OF_KIND[self]

    @property
    def is_logic(self) -> bool:
        return self is not Kind.INPUT and self is not Kind.CONST


_OP_OF_KIND = {k: Op[k.name] for k in Kind if k.name in Op.__members__}


UNARY_KINDS = frozenset({Kind.NOT, Kind.BITSWAP, Kind.INWARD, Kind.OUTWARD})
BINARY_KINDS = frozenset({Kind.EQ, Kind.XOR, Kind.XNOR, Kind.NAND, Kind.NOR})
AND_LIKE = frozenset({Kind.AND, Kind.MIN})
OR_LIKE = frozenset({Kind.OR, Kind.MAX})
_TREE_KINDS = AND_LIKE | OR_LIKE
_KIND_OF_OP = {op: Kind[op.name] for op in Op}


def _as_kind(kind: Kind | Op) -> Kind:
    return kind if isinstance(kind, Kind) else _KIND_OF_OP[kind]


class NetlistError(ValueError):
    pass


class NetlistFormatError(NetlistError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


@dataclass(frozen=True)
class Gate:
    id: int
    kind: Kind
    inputs: tuple[int, ...] = ()
    const_value: int | None = None
    input_name: str | None = None


@dataclass
class Netlist:
    v1: int = 2
    v2: int = 2
    gates: list[Gate] = field(default_factory=list)
    outputs: dict[str, int] = field(default_factory=dict)
    _consts: dict[int, int] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.v1 < 2 or self.v2 < 2:
            raise NetlistError(f"fan-in limits must be >= 2, got v1={self.v1}, v2={self.v2}")

    # -- construction ---------------------------------------------------

    def _append(self, kind: Kind, inputs=(), const_value=None, input_name=None) -> int:
        gid = len(self.gates)
        self.gates.append(Gate(gid, kind, tuple(inputs), const_value, input_name))
        if kind is Kind.CONST:
            self._consts.setdefault(const_value, gid)
        return gid

    def add_input(self, name: str) -> int:
        if name in self.input_names:
            raise NetlistError(f"duplicate input {name!r}")
        return self._append(Kind.INPUT, input_name=name)

    def const(self, value: int) -> int:
        """Id of a CONST gate with ``value``, created on first use."""
        value = check_qudit(value)
        if value in self._consts:
            return self._consts[value]
        return self._append(Kind.CONST, const_value=value)

    def add_gate(self, kind: Kind | Op, *inputs: int) -> int:
        kind = _as_kind(kind)
        if not kind.is_logic:
            raise NetlistError(f"use add_input/const for {kind.name}")
        self._check_arity(kind, len(inputs))
        size = len(self.gates)
        for i in inputs:
            if not 0 <= i < size:
                raise NetlistError(f"operand g{i} does not exist")
        return self._append(kind, inputs)

    def set_output(self, name: str, gid: int) -> None:
        if not 0 <= gid < len(self.gates):
            raise NetlistError(f"output {name!r} refers to missing gate g{gid}")
        self.outputs[name] = gid

    def _check_arity(self, kind: Kind, n: int) -> None:
        if kind in UNARY_KINDS:
            ok = n == 1
        elif kind in BINARY_KINDS:
            ok = n == 2
        else:
            limit = self.v1 if kind in AND_LIKE else self.v2
            ok = 2 <= n <= limit
        if not ok:
            raise NetlistError(f"{kind.name} gate cannot take {n} inputs (fan-in {self.v1}/{self.v2})")

    # -- queries ----------------------------------------------------------

    @property
    def input_names(self) -> list[str]:
        return [g.input_name for g in self.gates if g.kind is Kind.INPUT]

    def input_id(self, name: str) -> int:
        for g in self.gates:
            if g.kind is Kind.INPUT and g.input_name == name:
                return g.id
        raise KeyError(name)

    def kind_counts(self) -> Counter:
        return Counter(g.kind for g in self.gates if g.kind.is_logic)

    def validate(self) -> None:
        seen_inputs = set()
        for pos, g in enumerate(self.gates):
            if g.id != pos:
                raise NetlistError(f"gate ids must be dense, found g{g.id} at position {pos}")
            if g.kind is Kind.INPUT:
                if not g.input_name or g.input_name in seen_inputs:
                    raise NetlistError(f"bad or duplicate input name {g.input_name!r}")
                seen_inputs.add(g.input_name)
            elif g.kind is Kind.CONST:
                check_qudit(g.const_value)
            else:
                self._check_arity(g.kind, len(g.inputs))
                if any(not 0 <= i < g.id for i in g.inputs):
                    raise NetlistError(f"g{g.id} reads a gate that is not earlier in the list")
        for name, gid in self.outputs.items():
            if not 0 <= gid < len(self.gates):
                raise NetlistError(f"output {name!r} refers to missing gate g{gid}")


def ceil_log(v: int, n: int) -> int:
    """Smallest ``k >= 0`` with ``v**k >= n``."""
    k, reach = 0, 1
    while reach < n:
        reach *= v
        k += 1
    return k


def build_tree(kind: Kind | Op, inputs: Sequence[int], v: int, sink: Netlist) -> int:
    """Combine ``inputs`` with a tree of ``kind`` gates of fan-in at most ``v``.

    Uses ``ceil((n-1)/(v-1))`` gates and depth ``ceil(log_v n)``.  Only the
    bottom level may hold a gate with fewer than ``v`` inputs; it reduces the
    item count to an exact power of ``v``, above which every gate is full.
    """
    kind = _as_kind(kind)
    if kind not in _TREE_KINDS:
        raise NetlistError(f"cannot build a tree of {kind.name} gates")
    if v < 2:
        raise NetlistError(f"fan-in must be >= 2, got {v}")
    items = list(inputs)
    if not items:
        raise NetlistError("cannot build a tree over zero inputs")
    n = len(items)
    if n == 1:
        return items[0]
    depth = ceil_log(v, n)
    target = v ** (depth - 1)
    excess = n - target
    full, rest = divmod(excess, v - 1)
    level = []
    pos = 0
    for _ in range(full):
        level.append(sink.add_gate(kind, *items[pos:pos + v]))
        pos += v
    if rest:
        level.append(sink.add_gate(kind, *items[pos:pos + rest + 1]))
        pos += rest + 1
    level.extend(items[pos:])
    while len(level) > 1:
        level = [
            sink.add_gate(kind, *level[i:i + v]) if len(level[i:i + v]) > 1 else level[i]
            for i in range(0, len(level), v)
        ]
    return level[0]


# -- simulation ---------------------------------------------------------------


def simulate_arrays(nl: Netlist, bindings: Mapping[str, np.ndarray]) -> dict[str, np.ndarray]:
    """Evaluate the netlist over equally shaped arrays of input values."""
    missing = [name for name in nl.input_names if name not in bindings]
    if missing:
        raise NetlistError(f"unbound input {missing[0]!r}")
    shape = np.broadcast(*(np.asarray(b) for b in bindings.values())).shape if bindings else ()
    values: list[np.ndarray] = []
    for g in nl.gates:
        if g.kind is Kind.INPUT:
            arr = np.asarray(bindings[g.input_name], dtype=np.uint8)
            if arr.size and arr.max() > 3:
                raise NetlistError(f"input {g.input_name!r} bound to a non-qudit value")
            values.append(np.broadcast_to(arr, shape))
        elif g.kind is Kind.CONST:
            values.append(np.full(shape, g.const_value, dtype=np.uint8))
        elif g.kind in UNARY_KINDS:
            values.append(UNARY_TABLE[g.kind.op][values[g.inputs[0]]])
        else:
            table = DYADIC_TABLE[g.kind.op]
            acc = values[g.inputs[0]]
            for i in g.inputs[1:]:
                acc = table[acc, values[i]]
            values.append(acc)
    return {name: values[gid] for name, gid in nl.outputs.items()}


def simulate(nl: Netlist, bindings: Mapping[str, int]) -> dict[str, int]:
    arrays = {name: np.array([check_qudit(v)], dtype=np.uint8) for name, v in bindings.items()}
    return {name: int(np.ravel(v)[0]) for name, v in simulate_arrays(nl, arrays).items()}


def tabulate(nl: Netlist, output: str | None = None, inputs: Sequence[str] | None = None) -> QFunction:
    """Exhaustively simulate one output as a function of ``inputs`` (declaration order by default)."""
    names = list(inputs) if inputs is not None else nl.input_names
    if not names:
        raise NetlistError("netlist has no inputs to tabulate over")
    if output is None:
        if len(nl.outputs) != 1:
            raise NetlistError("netlist has several outputs; name the one to tabulate")
        output = next(iter(nl.outputs))
    matrix = input_matrix(len(names))
    result = simulate_arrays(nl, {name: matrix[:, i] for i, name in enumerate(names)})
    return qf_from_array(len(names), result[output])


def gate_count(nl: Netlist) -> int:
    return sum(1 for g in nl.gates if g.kind.is_logic)


def depth(nl: Netlist) -> int:
    levels: list[int] = []
    for g in nl.gates:
        levels.append(1 + max(levels[i] for i in g.inputs) if g.kind.is_logic else 0)
    return max((levels[gid] for gid in nl.outputs.values()), default=0)


# -- .qnet text format ----------------------------------------------------------


def dumps_qnet(nl: Netlist) -> str:
    nl.validate()
    names = {g.id: g.input_name for g in nl.gates if g.kind is Kind.INPUT}

    def ref(gid: int) -> str:
        return names.get(gid, f"g{gid}")

    lines = ["quatnet 1", f"fanin {nl.v1} {nl.v2}"]
    for g in nl.gates:
        if g.kind is Kind.INPUT:
            lines.append(f"input {g.input_name}")
        elif g.kind is Kind.CONST:
            lines.append(f"const g{g.id} {g.const_value}")
        else:
            lines.append(f"g{g.id} = {g.kind.name} " + " ".join(ref(i) for i in g.inputs))
    for name, gid in nl.outputs.items():
        lines.append(f"output {name} {ref(gid)}")
    return "\n".join(lines) + "\n"


def _gate_token(tok: str, lineno: int) -> int:
    if len(tok) < 2 or tok[0] != "g" or not tok[1:].isdigit():
        raise NetlistFormatError(f"expected gate id g<n>, got {tok!r}", lineno)
    return int(tok[1:])


def loads_qnet(text: str) -> Netlist:
    """Parse ``.qnet`` text; gate ids must increase and are renumbered densely."""
    header_seen = False
    nl: Netlist | None = None
    remap: dict[str, int] = {}
    last_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if not header_seen:
            if fields != ["quatnet", "1"]:
                raise NetlistFormatError("expected header 'quatnet 1'", lineno)
            header_seen = True
            continue
        if nl is None:
            if len(fields) != 3 or fields[0] != "fanin" or not all(f.isdigit() for f in fields[1:]):
                raise NetlistFormatError("expected 'fanin <v1> <v2>'", lineno)
            try:
                nl = Netlist(int(fields[1]), int(fields[2]))
            except NetlistError as exc:
                raise NetlistFormatError(str(exc), lineno) from None
            continue

        def operand(tok: str) -> int:
            if tok not in remap:
                raise NetlistFormatError(f"unknown operand {tok!r}", lineno)
            return remap[tok]

        def fresh_id(tok: str) -> None:
            nonlocal last_id
            gid = _gate_token(tok, lineno)
            if gid <= last_id:
                raise NetlistFormatError(f"gate ids must strictly increase, got {tok}", lineno)
            last_id = gid

        try:
            if fields[0] == "input" and len(fields) == 2:
                if fields[1] in remap:
                    raise NetlistFormatError(f"duplicate name {fields[1]!r}", lineno)
                remap[fields[1]] = nl.add_input(fields[1])
            elif fields[0] == "const" and len(fields) == 3:
                fresh_id(fields[1])
                if fields[2] not in ("0", "1", "2", "3"):
                    raise NetlistFormatError(f"constant must be 0-3, got {fields[2]!r}", lineno)
                remap[fields[1]] = nl._append(Kind.CONST, const_value=int(fields[2]))
            elif fields[0] == "output" and len(fields) == 3:
                nl.set_output(fields[1], operand(fields[2]))
            elif len(fields) >= 3 and fields[1] == "=":
                fresh_id(fields[0])
                if fields[2] not in Kind.__members__ or not Kind[fields[2]].is_logic:
                    raise NetlistFormatError(f"unknown gate kind {fields[2]!r}", lineno)
                remap[fields[0]] = nl.add_gate(Kind[fields[2]], *(operand(t) for t in fields[3:]))
            else:
                raise NetlistFormatError(f"unrecognised declaration {line!r}", lineno)
        except NetlistFormatError:
            raise
        except NetlistError as exc:
            raise NetlistFormatError(str(exc), lineno) from None
    if nl is None:
        raise NetlistFormatError("missing header or fanin line")
    return nl


def read_qnet(path: str | Path) -> Netlist:
    return loads_qnet(Path(path).read_text())


def write_qnet(nl: Netlist, path: str | Path) -> None:
    Path(path).write_text(dumps_qnet(nl))
