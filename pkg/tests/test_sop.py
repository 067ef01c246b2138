import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import MAX_TABLE, MIN_TABLE
from quatsynth.algebra import Op
from quatsynth.circuits import minmax_reference
from quatsynth.function import input_matrix, qf_from_rows, qf_of_evaluator, qf_random, row_index
from quatsynth.minimize import Cube
from quatsynth.sop import (
    Form,
    Form1Literal,
    Form1Product,
    Form2Literal,
    Form2Product,
    Half,
    Shape,
    SopError,
    SopExpr,
    SopFormatError,
    decompose_form2,
    dumps_qsop,
    eval_sop,
    eval_sop_rows,
    form1_use_minmax,
    loads_qsop,
    minterm_form1,
    sop_table,
    synthesize,
    synthesize_form1,
    synthesize_form2,
    transform_literals,
)

MIN_F = qf_from_rows(2, MIN_TABLE)
MAX_F = qf_from_rows(2, MAX_TABLE)
seeded = st.tuples(st.integers(1, 3), st.integers(0, 2 ** 32)).map(lambda t: qf_random(*t))


def E(var, c):
    return Form1Literal(var, c)


def test_minterm_examples():
    assert minterm_form1((1, 2, 0), 1) == Form1Product((E(1, 1), E(2, 2), E(3, 0)), 1)
    assert minterm_form1((2, 3, 1), 3) == Form1Product((E(1, 2), E(2, 3), E(3, 1)), 3)
    e = SopExpr(Form.FORM1, 1, (minterm_form1((3,), 2),))
    assert eval_sop(e, (3,)) == 2 and eval_sop(e, (0,)) == 0
    with pytest.raises(SopError):
        minterm_form1((1,), 0)


def test_form1_of_three_point_function(eq_v15):
    e = synthesize_form1(eq_v15)
    assert e.products == (
        minterm_form1((1, 2, 0), 1),
        minterm_form1((2, 3, 1), 3),
        minterm_form1((3, 1, 2), 2),
    )
    assert eval_sop(e, (1, 2, 0)) == 1
    assert eval_sop(e, (0, 0, 0)) == 0
    assert sop_table(e) == eq_v15


def test_form1_products_ordered_by_row():
    e = synthesize_form1(qf_random(2, 11))
    rows = [row_index([lit.constant for lit in p.literals]) for p in e.products]
    assert rows == sorted(rows)


def test_form1_degenerate_and_min():
    zero = synthesize_form1(qf_from_rows(1, [0] * 4))
    assert len(zero) == 0 and sop_table(zero).outputs == (0,) * 4
    e = synthesize_form1(MIN_F)
    assert len(e) == sum(1 for v in MIN_TABLE if v) == 9
    assert sop_table(e) == MIN_F


@settings(deadline=None)
@given(seeded)
def test_form1_term_count_is_nonzero_rows(f):
    e = synthesize_form1(f)
    assert len(e) == sum(1 for v in f.outputs if v)
    assert sop_table(e) == f


def test_decompose_examples():
    _, min1 = decompose_form2(MIN_F)
    assert min1.ones == frozenset(i for i, v in enumerate(MIN_TABLE) if v in (2, 3))
    f0, f1 = decompose_form2(qf_from_rows(1, [3] * 4))
    assert f0.ones == f1.ones == frozenset(range(4))
    inv0, _ = decompose_form2(qf_from_rows(1, [3, 2, 1, 0]))
    assert inv0.ones == frozenset({0, 2})


def test_transform_examples():
    a0b0 = Cube(0b0101, 0b0101)
    a1b1 = Cube(0b1010, 0b1010)
    a1, b1 = Cube(0b1000, 0b1000), Cube(0b0010, 0b0010)
    X1, X2 = Form2Literal(1, Shape.PLAIN), Form2Literal(2, Shape.PLAIN)
    assert transform_literals([a0b0], Half.F0, 2) == [Form2Product((X1, X2), 1)]
    assert transform_literals([a1b1], Half.F1, 2) == [Form2Product((X1, X2), 2)]
    assert transform_literals([a1, b1], Half.F1, 2) == [Form2Product((X1,), 2), Form2Product((X2,), 2)]


def test_transform_shapes_per_half():
    # One variable: bit 1 is x1, bit 0 is x0.
    cases = {
        (Half.F0, Cube(1, 1)): Shape.PLAIN,
        (Half.F0, Cube(1, 0)): Shape.NOT,
        (Half.F0, Cube(2, 2)): Shape.SWAP,
        (Half.F0, Cube(2, 0)): Shape.SWAPNOT,
        (Half.F1, Cube(1, 1)): Shape.SWAP,
        (Half.F1, Cube(1, 0)): Shape.SWAPNOT,
        (Half.F1, Cube(2, 2)): Shape.PLAIN,
        (Half.F1, Cube(2, 0)): Shape.NOT,
    }
    for (half, c), shape in cases.items():
        (p,) = transform_literals([c], half, 1)
        assert p.literals == (Form2Literal(1, shape),)
        assert p.weight == half.weight


@pytest.mark.parametrize("f, which", [(MIN_F, Op.MIN), (MAX_F, Op.MAX)])
def test_form2_matches_reference_expressions(f, which):
    ours = synthesize_form2(f)
    ref = minmax_reference(which)
    assert sop_table(ours) == sop_table(ref) == f


def test_min_reference_value_at_one_two():
    assert eval_sop(minmax_reference(Op.MIN), (1, 2)) == 1
    assert eval_sop(minmax_reference(Op.MAX), (1, 2)) == 2


def test_form2_degenerate():
    assert len(synthesize_form2(qf_from_rows(1, [0] * 4))) == 0
    three = synthesize_form2(qf_from_rows(2, [3] * 16))
    assert sorted((p.weight, p.literals) for p in three.products) == [(1, ()), (2, ())]
    assert sop_table(three).outputs == (3,) * 16


def test_form2_arity_limit():
    with pytest.raises(SopError, match="arity"):
        synthesize_form2(qf_from_rows(7, [0] * 4 ** 7))


@settings(deadline=None)
@given(seeded)
def test_form2_round_trip_and_weight_partition(f):
    e = synthesize_form2(f)
    assert sop_table(e) == f
    x = input_matrix(f.arity)
    for w, values in ((1, (1, 3)), (2, (2, 3))):
        half = SopExpr(Form.FORM2, f.arity, tuple(p for p in e.products if p.weight == w))
        hit = eval_sop_rows(half, x) != 0
        assert np.array_equal(hit, np.isin(f.table, values))


def test_minmax_agrees_with_and_or_except_mixed_intermediates():
    differing = []
    for a in range(4):
        for b in range(4):
            and_ok = min(a, b) == a & b
            or_ok = max(a, b) == a | b
            if not (and_ok and or_ok):
                differing.append((a, b))
            assert and_ok == or_ok
    assert differing == [(1, 2), (2, 1)]


@settings(deadline=None)
@given(st.tuples(st.integers(1, 2), st.integers(0, 2 ** 32)).map(lambda t: qf_random(*t)))
def test_form1_minmax_preserves_function(f):
    e = synthesize_form1(f)
    marked = form1_use_minmax(e)
    assert marked.minmax and sop_table(marked) == sop_table(e) == f


def test_minmax_rejected_for_form2():
    with pytest.raises(SopError, match="form-II"):
        form1_use_minmax(synthesize_form2(MIN_F))
    with pytest.raises(SopError):
        SopExpr(Form.FORM2, 1, (), minmax=True)


def test_product_invariants():
    with pytest.raises(SopError):
        Form1Product((E(1, 0),), 0)
    with pytest.raises(SopError):
        Form1Product((E(1, 0), E(1, 2)), 1)
    with pytest.raises(SopError):
        Form2Product((Form2Literal(1, Shape.PLAIN), Form2Literal(1, Shape.NOT)), 1)
    with pytest.raises(SopError):
        Form2Product((Form2Literal(1, Shape.SWAP), Form2Literal(1, Shape.SWAPNOT)), 2)
    with pytest.raises(SopError):
        SopExpr(Form.FORM1, 1, (Form1Product((E(2, 0),), 1),))
    with pytest.raises(SopError):
        SopExpr(Form.FORM2, 1, (Form1Product((E(1, 0),), 1),))


def test_eval_arity_mismatch():
    with pytest.raises(SopError, match="arity"):
        eval_sop(synthesize_form1(MIN_F), (1,))


@settings(deadline=None)
@given(seeded, st.sampled_from([Form.FORM1, Form.FORM2]))
def test_qsop_round_trip(f, form):
    e = synthesize(f, form)
    if form is Form.FORM1:
        e = form1_use_minmax(e)
    assert loads_qsop(dumps_qsop(e)) == e


def test_qsop_text_layout():
    text = dumps_qsop(minmax_reference(Op.MIN))
    assert text.splitlines() == [
        "form 2",
        "vars 2",
        "term 1 X1 X2",
        "term 1 S(X1) SN(X2) X2",
        "term 1 S(X2) SN(X1) X1",
        "term 2 X1 X2",
    ]
    form1 = dumps_qsop(synthesize_form1(qf_from_rows(1, [0, 0, 2, 0])))
    assert form1 == "form 1\nvars 1\nterm 2 E(X1,2)\n"


def test_qsop_tautology_and_comments():
    e = loads_qsop("# c\nform 2\nvars 1\nterm 1\nterm 2 N(X1)\n")
    assert sop_table(e).outputs == (3, 3, 1, 1)


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("form 3\nvars 1\n", 1),
        ("form 1\nvars x\n", 2),
        ("form 2\nvars 1\nterm 0 X1\n", 3),
        ("form 2\nvars 1\nterm 1 Q(X1)\n", 3),
        ("form 2\nvars 1\nterm 1 X1 N(X1)\n", 3),
        ("form 2\nvars 1\nterm 1 E(X1,2)\n", 3),
        ("form 1\nvars 1\nbogus\n", 3),
        ("form 1\n", None),
        ("form 2\nvars 1\nterm 1 X2\n", None),
    ],
)
def test_qsop_errors(text, lineno):
    with pytest.raises(SopFormatError) as info:
        loads_qsop(text)
    assert info.value.lineno == lineno


def test_synthesize_dispatch():
    f = qf_of_evaluator(1, lambda x: 3 - x[0])
    assert synthesize(f, 1).form is Form.FORM1
    assert synthesize(f, Form.FORM2).form is Form.FORM2
