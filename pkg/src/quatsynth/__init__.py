"""Quaternary algebra, SOP synthesis and gate-level netlists."""

from .algebra import Op, apply, apply_dyadic, apply_unary, is_symmetric, pack, unpack
from .bounds import BoundsReport, bound_form1, bound_form2, worst_case_function
from .function import (
    QFunction,
    partition_minterms,
    qf_eval,
    qf_from_rows,
    qf_of_evaluator,
    qf_random,
    row_index,
)
from .lower import lower_sop
from .minimize import BinaryFunction, Cube, minimize_binary
from .netlist import Kind, Netlist, build_tree, depth, gate_count, simulate, tabulate
from .peephole import peephole_inverters
from .sop import (
    Form,
    SopExpr,
    decompose_form2,
    eval_sop,
    form1_use_minmax,
    minterm_form1,
    synthesize_form1,
    synthesize_form2,
    transform_literals,
)

__version__ = "0.1.0"
