import itertools
import random

import numpy as np
import pytest

from catrank.framework import new_af
from catrank.generator import GenSpec, random_af
from catrank.ranking import (
    Relation,
    categoriser_ranking,
    certified_compare,
    compare,
    group_compare,
    group_compare_bruteforce,
    rank_from_strengths,
)
from catrank.solver import SolveConfig, solve, solve_certified

X1, X2, X3, X4, X5 = range(5)


@pytest.fixture
def r1(example1):
    return rank_from_strengths(solve(example1, SolveConfig(1e-10)), 1e-9)


def test_example1_ranking(r1):
    assert r1.classes == ((X3,), (X1,), (X5,), (X2,), (X4,))


def test_single_class_and_exact_ties():
    assert rank_from_strengths(np.ones(4)).classes == ((0, 1, 2, 3),)
    assert rank_from_strengths(np.array([0.5, 0.5, 0.9]), 0.0).classes == ((2,), (0, 1))
    assert rank_from_strengths(np.zeros(0)).classes == ()


def test_chain_merging_is_transitive():
    r = rank_from_strengths(np.array([0.50, 0.505, 0.51, 0.60]), 0.006)
    assert r.classes == ((3,), (0, 1, 2))


def test_negative_epsilon_rejected():
    with pytest.raises(ValueError):
        rank_from_strengths(np.ones(2), -1.0)


def test_compare(r1):
    assert compare(r1, X3, X4) is Relation.ABOVE
    assert compare(r1, X1, X1) is Relation.EQUIVALENT
    assert compare(r1, X4, X2) is Relation.BELOW
    with pytest.raises(IndexError):
        compare(r1, 0, 9)


def test_certified_compare(example1):
    strengths, bounds = solve_certified(example1, SolveConfig(1e-12))
    r = rank_from_strengths(strengths, 1e-11, bounds)
    assert certified_compare(r, X3, X4) is Relation.ABOVE
    assert certified_compare(r, X4, X3) is Relation.BELOW
    loose_strengths, loose = solve_certified(example1, SolveConfig(0.5))
    coarse = rank_from_strengths(loose_strengths, 0.0, loose)
    # interval widths of 0.5 cannot separate x1 from x5
    assert certified_compare(coarse, X1, X5) is Relation.UNRESOLVED


def test_group_compare_examples(r1):
    assert group_compare(r1, {X3}, {X4}) == group_compare_bruteforce(r1, {X3}, {X4})
    g = group_compare(r1, {X3}, {X4})
    assert g.geq and g.strict
    g = group_compare(r1, {X1, X2}, {X1, X2})
    assert g.geq and not g.strict
    assert not group_compare(r1, set(), {X1}).geq
    assert not group_compare_bruteforce(r1, {X3}, {X1, X2}).geq
    assert group_compare(r1, {X4, X2}, {X4}).strict  # larger set is strict


def test_bruteforce_cap(r1):
    r = rank_from_strengths(np.linspace(0, 1, 10))
    with pytest.raises(ValueError):
        group_compare_bruteforce(r, range(9), range(2))


def test_group_compare_agrees_with_bruteforce_random():
    rnd = random.Random(3)
    for _ in range(2000):
        n = rnd.randint(1, 10)
        values = np.array([rnd.choice([0.1, 0.2, 0.3, 0.4, 0.5]) for _ in range(n)])
        r = rank_from_strengths(values)
        s1 = rnd.sample(range(n), rnd.randint(0, min(n, 6)))
        s2 = rnd.sample(range(n), rnd.randint(0, min(n, 6)))
        assert group_compare(r, s1, s2) == group_compare_bruteforce(r, s1, s2)


def test_group_compare_monotone_in_s1():
    rnd = random.Random(4)
    for _ in range(1000):
        n = rnd.randint(2, 9)
        r = rank_from_strengths(np.array([rnd.random() for _ in range(n)]))
        s1 = set(rnd.sample(range(n), rnd.randint(0, n - 1)))
        s2 = rnd.sample(range(n), rnd.randint(0, n))
        extra = rnd.choice([i for i in range(n) if i not in s1])
        if group_compare(r, s1, s2).geq:
            assert group_compare(r, s1 | {extra}, s2).geq


def test_total_preorder_and_strict_iff_greater():
    for seed in range(40):
        af = random_af(GenSpec(9, 0.3, True, seed))
        s = solve(af, SolveConfig(1e-12))
        r = rank_from_strengths(s, 0.0)
        for x, y in itertools.product(range(af.n), repeat=2):
            assert compare(r, x, y) in (Relation.ABOVE, Relation.EQUIVALENT) or compare(r, y, x) is Relation.ABOVE
            assert (compare(r, x, y) is Relation.ABOVE) == (s.values[x] > s.values[y])
        for x, y, z in itertools.product(range(af.n), repeat=3):
            if compare(r, x, y) is not Relation.BELOW and compare(r, y, z) is not Relation.BELOW:
                assert compare(r, x, z) is not Relation.BELOW


def test_identical_attackers_share_a_class_in_cli_sense():
    af = new_af(list("abcd"), [("a", "c"), ("a", "d"), ("b", "a"), ("c", "b")])
    r = categoriser_ranking(af)
    assert r.level[2] == r.level[3]
