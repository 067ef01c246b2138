import pytest

from oracles import FORM1_WORST_2, form1_bound, form2_bound
from quatsynth.bounds import BoundsReport, bound, bound_form1, bound_form2, worst_case_function
from quatsynth.function import qf_random
from quatsynth.lower import lower_sop
from quatsynth.netlist import depth, gate_count
from quatsynth.sop import Form, decompose_form2, synthesize


@pytest.mark.parametrize("n, v1, v2, count, d", [(2, 2, 2, 71, 9), (1, 2, 2, 12, 6)])
def test_form2_bound_values(n, v1, v2, count, d):
    report = bound_form2(n, v1, v2)
    assert (report.n_bound, report.d_bound) == (count, d)


@pytest.mark.parametrize("n, v1, v2, count, d", [(2, 2, 2, 55, 7), (1, 2, 2, 11, 4)])
def test_form1_bound_values(n, v1, v2, count, d):
    report = bound_form1(n, v1, v2, 1, 1)
    assert (report.n_bound, report.d_bound) == (count, d)


def test_bounds_agree_with_independent_formulas():
    for n in range(1, 6):
        for v1 in range(2, 6):
            for v2 in range(2, 6):
                r2 = bound_form2(n, v1, v2)
                assert (r2.n_bound, r2.d_bound) == form2_bound(n, v1, v2)
                for n0, d0 in ((0, 0), (1, 1), (5, 4)):
                    r1 = bound_form1(n, v1, v2, n0, d0)
                    assert (r1.n_bound, r1.d_bound) == form1_bound(n, v1, v2, n0, d0)


def test_form2_bound_monotone_in_arity():
    assert bound_form2(1, 2, 2).n_bound < bound_form2(2, 2, 2).n_bound


def test_zero_equality_cost_drops_literal_term():
    for n in (1, 2, 3):
        assert bound_form1(n, 2, 2, 1, 1).n_bound - bound_form1(n, 2, 2, 0, 1).n_bound == 4 * n


def test_bound_dispatch_and_errors():
    assert bound(Form.FORM2, 2, 2, 2) == bound_form2(2, 2, 2)
    assert bound(1, 2, 2, 2, 5, 4) == bound_form1(2, 2, 2, 5, 4)
    with pytest.raises(ValueError):
        bound_form2(0, 2, 2)
    with pytest.raises(ValueError):
        bound_form1(1, 1, 2)


def test_report_text_and_holds():
    r = BoundsReport(71, 9)
    assert str(r) == "N=71 d=9"
    with pytest.raises(ValueError):
        r.holds
    m = BoundsReport(71, 9, 71, 9)
    assert m.holds and str(m) == "N=71 d=9 measured_N=71 measured_d=9"
    assert not BoundsReport(10, 3, 11, 3).holds


def test_checkerboard_worst_case():
    f = worst_case_function(2, Form.FORM2)
    f0, f1 = decompose_form2(f)
    assert len(f0.ones) == len(f1.ones) == 8
    one = worst_case_function(1, Form.FORM2)
    assert [len(h.ones) for h in decompose_form2(one)] == [2, 2]


def test_checkerboard_lowering_meets_bound_exactly():
    nl = lower_sop(synthesize(worst_case_function(2, Form.FORM2), Form.FORM2), 2, 2)
    assert gate_count(nl) <= 71 and depth(nl) <= 9
    # The structure is tight: every term of the bound is used.
    assert (gate_count(nl), depth(nl)) == (71, 9)


def test_form1_worst_case_table():
    f = worst_case_function(2, Form.FORM1)
    assert [list(f.outputs[4 * r:4 * r + 4]) for r in range(4)] == FORM1_WORST_2
    nl = lower_sop(synthesize(f, Form.FORM1), 2, 2)
    assert (gate_count(nl), depth(nl)) == (55, 7)


def test_form1_worst_case_other_arities_only_one_and_two():
    for n in (1, 3):
        f = worst_case_function(n, Form.FORM1, seed=4)
        assert set(f.outputs) <= {1, 2}
        assert f == worst_case_function(n, Form.FORM1, seed=4)


@pytest.mark.parametrize("form", [Form.FORM1, Form.FORM2])
@pytest.mark.parametrize("v1, v2", [(2, 2), (3, 2), (2, 4), (4, 3)])
def test_worst_cases_within_bounds(form, v1, v2):
    for n in (1, 2, 3):
        nl = lower_sop(synthesize(worst_case_function(n, form), form), v1, v2)
        assert bound(form, n, v1, v2).measured(nl).holds


@pytest.mark.parametrize("form", [Form.FORM1, Form.FORM2])
def test_random_functions_within_bounds(form):
    for n, seed in [(1, 0), (2, 1), (2, 2), (3, 3)]:
        nl = lower_sop(synthesize(qf_random(n, seed), form), 2, 3)
        assert bound(form, n, 2, 3).measured(nl).holds
