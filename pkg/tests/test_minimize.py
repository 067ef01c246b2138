import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import MAX_TABLE, MIN_TABLE, min_cover_size
from quatsynth.function import qf_from_rows
from quatsynth.minimize import BinaryFunction, Cube, cover_is_valid, minimize_binary, prime_implicants
from quatsynth.sop import decompose_form2

BIT = {"a1": 3, "a0": 2, "b1": 1, "b0": 0}


def cube(*lits):
    """``cube("a1", "~b0")`` -> Cube over the four bits of two qudits."""
    mask = value = 0
    for lit in lits:
        name = lit.lstrip("~")
        mask |= 1 << BIT[name]
        if not lit.startswith("~"):
            value |= 1 << BIT[name]
    return Cube(mask, value)


MIN0, MIN1 = decompose_form2(qf_from_rows(2, MIN_TABLE))
MAX0, MAX1 = decompose_form2(qf_from_rows(2, MAX_TABLE))

HAND_COVERS = [
    (MIN0, [cube("a0", "b0"), cube("a1", "~b1", "b0"), cube("b1", "~a1", "a0")]),
    (MIN1, [cube("a1", "b1")]),
    (MAX0, [cube("a1", "a0"), cube("b1", "b0"), cube("~a1", "b0"), cube("~b1", "a0")]),
    (MAX1, [cube("a1"), cube("b1")]),
]


@pytest.mark.parametrize("f, hand", HAND_COVERS, ids=["min0", "min1", "max0", "max1"])
def test_hand_covers_valid_and_not_beaten(f, hand):
    assert cover_is_valid(f, hand)
    ours = minimize_binary(f)
    assert cover_is_valid(f, ours)
    assert len(ours) <= len(hand)


def test_exact_cover_results():
    assert minimize_binary(MIN1) == [cube("a1", "b1")]
    assert sorted(minimize_binary(MAX1)) == sorted([cube("a1"), cube("b1")])
    assert len(minimize_binary(MIN0)) == 3
    assert len(minimize_binary(MAX0)) == 4


def test_printed_max0_third_term_is_not_an_implicant():
    # With ~b0 instead of b0 the third product reaches (A, B) = (0, 0), where MAX is 0.
    printed = [cube("a1", "a0"), cube("b1", "b0"), cube("~a1", "~b0"), cube("~b1", "a0")]
    assert not cover_is_valid(MAX0, printed)
    assert cube("~a1", "~b0").covers(0)


def test_degenerate_functions():
    assert minimize_binary(BinaryFunction(4, frozenset())) == []
    assert minimize_binary(BinaryFunction(2, frozenset(range(4)))) == [Cube(0, 0)]


def test_bit_limit():
    with pytest.raises(ValueError, match="at most 12"):
        minimize_binary(BinaryFunction(13, frozenset({0})))


def test_out_of_range_minterm_rejected():
    with pytest.raises(ValueError):
        BinaryFunction(2, frozenset({4}))


def test_cube_literals_msb_first():
    assert cube("a1", "~b0").literals() == [(3, True), (0, False)]
    assert cube("a1", "~b0").n_literals == 2


@pytest.mark.parametrize("bits", [1, 2, 3])
def test_minimum_matches_brute_force_for_every_function(bits):
    for table in range(1 << (1 << bits)):
        ones = frozenset(m for m in range(1 << bits) if table >> m & 1)
        f = BinaryFunction(bits, ones)
        cover = minimize_binary(f)
        assert cover_is_valid(f, cover)
        if len(ones) == 1 << bits:
            assert cover == [Cube(0, 0)]
        else:
            assert len(cover) == min_cover_size(bits, ones), sorted(ones)


@settings(max_examples=40, deadline=None)
@given(st.sets(st.integers(0, 15)))
def test_minimum_matches_brute_force_four_bits(ones):
    f = BinaryFunction(4, frozenset(ones))
    cover = minimize_binary(f)
    assert cover_is_valid(f, cover)
    if len(ones) < 16:
        assert len(cover) == min_cover_size(4, ones)


@settings(max_examples=25, deadline=None)
@given(st.integers(5, 8), st.data())
def test_cover_valid_and_prime(bits, data):
    ones = frozenset(data.draw(st.sets(st.integers(0, (1 << bits) - 1), max_size=1 << bits)))
    f = BinaryFunction(bits, ones)
    cover = minimize_binary(f)
    assert cover_is_valid(f, cover)
    if 0 < len(ones) < 1 << bits:
        primes = set(prime_implicants(bits, ones))
        assert set(cover) <= primes


def test_twelve_bit_parity_is_exact():
    ones = frozenset(m for m in range(1 << 12) if bin(m).count("1") & 1)
    cover = minimize_binary(BinaryFunction(12, ones))
    assert len(cover) == len(ones)


def test_deterministic():
    f = BinaryFunction(6, frozenset(range(0, 64, 3)))
    assert minimize_binary(f) == minimize_binary(f)
