import itertools

import pytest

from quatsynth.function import QFunction, qf_of_evaluator, qf_random

ARITY2_SEEDS = range(200)
ARITY3_SEEDS = range(1000, 1025)


def all_unary_functions():
    return [QFunction(1, outs) for outs in itertools.product(range(4), repeat=4)]


def corpus():
    """All 256 arity-1 functions, 200 seeded arity-2 and 25 seeded arity-3 functions."""
    return (
        all_unary_functions()
        + [qf_random(2, s) for s in ARITY2_SEEDS]
        + [qf_random(3, s) for s in ARITY3_SEEDS]
    )


def small_corpus():
    """A cheaper slice of the corpus for the slower per-combination tests."""
    return all_unary_functions()[::17] + [qf_random(2, s) for s in range(12)] + [qf_random(3, 1000)]


@pytest.fixture(scope="session")
def min_table():
    return qf_of_evaluator(2, lambda x: min(x))


@pytest.fixture(scope="session")
def max_table():
    return qf_of_evaluator(2, lambda x: max(x))


@pytest.fixture(scope="session")
def eq_v15():
    """Arity-3 function: 1 at (1,2,0), 2 at (3,1,2), 3 at (2,3,1), else 0."""
    points = {(1, 2, 0): 1, (3, 1, 2): 2, (2, 3, 1): 3}
    return qf_of_evaluator(3, lambda x: points.get(tuple(x), 0))
