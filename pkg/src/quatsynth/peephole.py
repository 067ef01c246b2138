"""Substitution of functional inverters for fixed product patterns.

With ``A`` any shared co-factor:

* form I  ``(X^0.2 + X^1.2 + X^2.1 + X^3.1).A``  ->  ``X'.A``   (rule ``inward-eq``)
* form I  ``(X^0.3 + X^1.3).A``                  ->  ``!X.A``   (rule ``outward-eq``)
* form II ``(NOT(X).2 + ~X.1).A``                ->  ``X'.A``   (rule ``inward-swap``)
* form II ``(NOT(X).2 + ~NOT(X).1).A``           ->  ``!X.A``   (rule ``outward-swap``)

A rewrite is kept only when the lowered netlist at the given fan-in does
not grow; every result is checked against the exhaustive truth table.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import replace

from .lower import lower_sop
from .netlist import gate_count
from .sop import (
    Form,
    Form1Literal,
    Form1Product,
    Form2Literal,
    Form2Product,
    Rewrite,
    Shape,
    SopExpr,
    sop_table,
)

_FORM1_RULES = {
    "inward-eq": ({0: 2, 1: 2, 2: 1, 3: 1}, Shape.INWARD),
    "outward-eq": ({0: 3, 1: 3}, Shape.OUTWARD),
}
_FORM2_RULES = {
    "inward-swap": (Shape.SWAP, Shape.INWARD),
    "outward-swap": (Shape.SWAPNOT, Shape.OUTWARD),
}


def _form1_candidates(e: SopExpr):
    """Yield ``(rule, var, indices, replacement)`` for every form-I match."""
    for var in range(1, e.arity + 1):
        groups: dict[tuple, dict[int, int]] = defaultdict(dict)
        for idx, p in enumerate(e.products):
            if not all(isinstance(lit, Form1Literal) for lit in p.literals):
                continue
            on_var = [lit for lit in p.literals if lit.var == var]
            if len(on_var) != 1:
                continue
            cofactor = tuple(lit for lit in p.literals if lit.var != var)
            groups[cofactor].setdefault(on_var[0].constant, idx)
        for cofactor, by_const in groups.items():
            for rule, (pattern, shape) in _FORM1_RULES.items():
                if all(
                    c in by_const and e.products[by_const[c]].weight == w for c, w in pattern.items()
                ):
                    indices = sorted(by_const[c] for c in pattern)
                    lits = tuple(sorted(cofactor + (Form2Literal(var, shape),), key=lambda lit: lit.var))
                    yield rule, var, indices, Form1Product(lits, 3)


def _form2_candidates(e: SopExpr):
    for var in range(1, e.arity + 1):
        not_x = Form2Literal(var, Shape.NOT)
        for i, p in enumerate(e.products):
            if p.weight != 2 or not_x not in p.literals:
                continue
            cofactor = frozenset(p.literals) - {not_x}
            for rule, (partner_shape, shape) in _FORM2_RULES.items():
                partner = Form2Literal(var, partner_shape)
                for j, q in enumerate(e.products):
                    if q.weight == 1 and partner in q.literals and frozenset(q.literals) - {partner} == cofactor:
                        lits = tuple(sorted(cofactor | {Form2Literal(var, shape)}))
                        yield rule, var, sorted((i, j)), Form2Product(lits, 3)
                        break


def peephole_inverters(e: SopExpr, v1: int = 2, v2: int = 2) -> SopExpr:
    """Apply inverter substitutions greedily until none is profitable."""
    reference = sop_table(e)
    candidates = _form1_candidates if e.form is Form.FORM1 else _form2_candidates
    cost = gate_count(lower_sop(e, v1, v2))
    rejected: set = set()
    while True:
        for rule, var, indices, product in candidates(e):
            key = (rule, var, tuple(e.products[i] for i in indices))
            if key in rejected:
                continue
            products = [p for k, p in enumerate(e.products) if k not in indices]
            products.insert(indices[0], product)
            trial = replace(
                e,
                products=tuple(products),
                rewrites=e.rewrites + (Rewrite(rule, var, len(indices)),),
            )
            trial_cost = gate_count(lower_sop(trial, v1, v2))
            if trial_cost <= cost:
                if sop_table(trial) != reference:
                    raise AssertionError(f"{rule} on X{var} changed the truth table")
                e, cost = trial, trial_cost
                break
            rejected.add(key)
        else:
            return e
