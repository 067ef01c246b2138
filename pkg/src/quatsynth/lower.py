"""Lowering of SOP expressions to fan-in-bounded netlists."""

from __future__ import annotations

from .algebra import Op
from .netlist import Kind, Netlist, build_tree
from .sop import Form, Form1Literal, Form2Literal, Form2Product, Shape, SopError, SopExpr

OUTPUT_NAME = "F"


def input_name(var: int) -> str:
    return f"X{var}"


def add_equality(nl: Netlist, a: int, b: int, expand: bool = False) -> int:
    """``E(a, b)`` as one EQ gate, or as ``!(a^b) . !(~(a^b))`` when ``expand``."""
    if not expand:
        return nl.add_gate(Kind.EQ, a, b)
    x = nl.add_gate(Kind.XOR, a, b)
    swapped = nl.add_gate(Kind.BITSWAP, x)
    return nl.add_gate(Kind.AND, nl.add_gate(Kind.OUTWARD, x), nl.add_gate(Kind.OUTWARD, swapped))


class _Literals:
    """Creates each literal gate once and shares it between products."""

    def __init__(self, nl: Netlist, arity: int, expand_equality: bool):
        self.nl = nl
        self.inputs = {var: nl.add_input(input_name(var)) for var in range(1, arity + 1)}
        self.expand_equality = expand_equality
        self.cache: dict = {}

    def get(self, lit) -> int:
        if lit in self.cache:
            return self.cache[lit]
        x = self.inputs[lit.var]
        if isinstance(lit, Form1Literal):
            gid = add_equality(self.nl, x, self.nl.const(lit.constant), self.expand_equality)
        elif lit.shape is Shape.PLAIN:
            gid = x
        elif lit.shape is Shape.SWAPNOT:
            gid = self.nl.add_gate(Kind.BITSWAP, self.get(Form2Literal(lit.var, Shape.NOT)))
        else:
            kind = {
                Shape.NOT: Kind.NOT,
                Shape.SWAP: Kind.BITSWAP,
                Shape.INWARD: Kind.INWARD,
                Shape.OUTWARD: Kind.OUTWARD,
            }[lit.shape]
            gid = self.nl.add_gate(kind, x)
        self.cache[lit] = gid
        return gid


def lower_sop(
    e: SopExpr,
    v1: int = 2,
    v2: int = 2,
    expand_equality: bool = False,
    use_minmax: bool = False,
) -> Netlist:
    """Build a netlist with inputs ``X1..Xn`` and a single output ``F``.

    Form I: shared equality literals, one AND tree per product (the weight
    constant joins the tree unless it is 3), one OR tree over the products.
    Form II: shared NOT/bitswap literals, one AND tree per product, one OR
    tree per half, each half masked by its weight with a single AND, and a
    final OR tree over the masked halves and any weight-3 products.
    """
    if e.form is Form.FORM2 and use_minmax:
        raise SopError("MIN/MAX lowering is not valid for form-II")
    use_minmax = use_minmax or e.minmax
    nl = Netlist(v1, v2)
    lits = _Literals(nl, e.arity, expand_equality)
    and_kind = Op.MIN if use_minmax else Op.AND
    or_kind = Op.MAX if use_minmax else Op.OR

    def product_root(p, with_weight: bool) -> int:
        leaves = [lits.get(lit) for lit in p.literals]
        if with_weight and p.weight != 3:
            leaves.append(nl.const(p.weight))
        if not leaves:
            return nl.const(p.weight)
        return build_tree(and_kind, leaves, v1, nl)

    if e.form is Form.FORM1:
        roots = [product_root(p, with_weight=True) for p in e.products]
    else:
        roots = []
        for weight in (1, 2):
            group: list[Form2Product] = [p for p in e.products if p.weight == weight]
            if not group:
                continue
            if any(not p.literals for p in group):
                roots.append(nl.const(weight))
                continue
            half = build_tree(or_kind, [product_root(p, with_weight=False) for p in group], v2, nl)
            roots.append(nl.add_gate(and_kind, half, nl.const(weight)))
        roots += [product_root(p, with_weight=True) for p in e.products if p.weight == 3]
    out = build_tree(or_kind, roots, v2, nl) if roots else nl.const(0)
    nl.set_output(OUTPUT_NAME, out)
    return nl
