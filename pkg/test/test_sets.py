#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Tests for tree sets, grid tree sets and their exact densities.
"""

import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tree_ramsey.semigroup import PairWord, Word, enumerate_ball, iter_sphere
from tree_ramsey.sets import (GridSet, GridTreeSet, Representation, TreeSet, _seed_to_rng, column_at,
                              density_1d, density_2d, density_sequence, level_lift, level_mask_1d,
                              random_grid_set, random_tree_set, row_densities, shift, slice_at,
                              translate)


def w(text: str, k: int = 2) -> Word:
    return Word.parse(k, text)


def pair(text: str, k: int = 2) -> PairWord:
    return PairWord.parse(k, text)


def all_pairs(k: int, N: int):
    ball = enumerate_ball(k, N - 1)
    return [PairWord(x, y) for x in ball for y in ball]


def fubini(A: GridTreeSet) -> Fraction:
    """(1/N) Σ_j k^{-j} Σ_{|y|=j} d_N(A_y), computed slice by slice."""
    total = Fraction(0)
    for j in range(A.depth):
        row = sum((density_1d(slice_at(A, y)) for y in iter_sphere(A.k, j)), Fraction(0))
        total += row / A.k ** j
    return total / A.depth


def test_density_1d_examples():
    assert density_1d(TreeSet.full(2, 4)) == 1
    assert density_1d(TreeSet.explicit(2, 2, [Word.empty(2)])) == Fraction(1, 2)
    assert density_1d(TreeSet.explicit(2, 2, [w(""), w("1")])) == Fraction(3, 4)


def test_density_2d_examples():
    assert density_2d(GridTreeSet.full(2, 3)) == 1
    assert density_2d(GridTreeSet.explicit(2, 2, [PairWord.identity(2)])) == Fraction(1, 4)
    assert density_2d(level_lift(GridSet(2, {(0, 0), (1, 1)}), 2)) == Fraction(1, 2)


def test_slice_examples():
    A = GridTreeSet.explicit(2, 3, [pair("0,1")])
    assert set(slice_at(A, w("1")).iter_members()) == {w("0")}
    assert len(slice_at(A, w("0"))) == 0
    full = GridTreeSet.full(2, 3)
    assert density_1d(slice_at(full, w("01"))) == 1
    assert set(column_at(A, w("0")).iter_members()) == {w("1")}


def test_level_lift_edges():
    assert density_2d(level_lift(GridSet(3), 2)) == 0
    assert density_2d(level_lift(GridSet.full(3), 2)) == 1


def test_level_lift_density_identity():
    rng = random.Random(13)
    for _ in range(50):
        N = rng.randint(1, 8)
        k = rng.randint(1, 3)
        cells = {(i, j) for i in range(N) for j in range(N) if rng.random() < 0.4}
        B = GridSet(N, cells)
        assert density_2d(level_lift(B, k)) == Fraction(len(cells), N * N)


def test_fubini_identity_on_random_sets():
    rng = random.Random(2)
    for trial in range(50):
        k = rng.choice([2, 3])
        N = rng.randint(1, 5 if k == 2 else 4)
        A = random_grid_set(N, k, Fraction(rng.randint(0, 4), 4), seed=trial)
        assert density_2d(A) == fubini(A)
        assert sum(row_densities(A), Fraction(0)) / N == density_2d(A)


def test_fubini_identity_on_level_lifts_and_predicates():
    B = GridSet(4, {(0, 1), (2, 2), (3, 0)})
    lifted = level_lift(B, 2)
    assert density_2d(lifted) == fubini(lifted)
    predicate = GridTreeSet.from_predicate(2, 4, lambda g: g.first.letters[:1] == (1,), "starts-with-1")
    assert density_2d(predicate) == fubini(predicate)


def test_representation_equivalence_exhaustive():
    k, N = 2, 3
    B = GridSet(N, {(0, 0), (1, 2), (2, 1)})
    for A in (level_lift(B, k),
              GridTreeSet.from_predicate(k, N, lambda g: len(g.first) != len(g.second), "off-diagonal")):
        explicit = A.to_explicit()
        assert explicit.representation == Representation.EXPLICIT
        assert density_2d(explicit) == density_2d(A)
        for g in all_pairs(k, N):
            assert explicit.contains(g) == A.contains(g)


def test_random_grid_set_extremes():
    assert len(random_grid_set(3, 2, 0, seed=1)) == 0
    assert density_2d(random_grid_set(3, 2, 1, seed=1)) == 1


def test_random_grid_set_is_seeded():
    assert random_grid_set(4, 2, Fraction(1, 2), seed=99) == random_grid_set(4, 2, Fraction(1, 2), seed=99)
    assert random_tree_set(5, 3, Fraction(1, 3), seed=4) == random_tree_set(5, 3, Fraction(1, 3), seed=4)


def test_random_sets_draw_from_philox():
    assert isinstance(_seed_to_rng(99).bit_generator, np.random.Philox)
    assert _seed_to_rng(-1).random() == np.random.Generator(np.random.Philox((1 << 64) - 1)).random()


def test_random_grid_set_mean_density():
    N, k = 4, 2
    draws = [float(density_2d(random_grid_set(N, k, Fraction(1, 2), seed=s))) for s in range(200)]
    mean = sum(draws) / len(draws)
    var = sum((d - mean) ** 2 for d in draws) / (len(draws) - 1)
    assert abs(mean - 0.5) <= 5 * (var / len(draws)) ** 0.5


def test_density_monotone_under_inclusion():
    A = random_grid_set(4, 2, Fraction(2, 3), seed=7)
    members = sorted(A.iter_members(), key=PairWord.sort_key)
    smaller = GridTreeSet.explicit(2, 4, members[::2])
    assert 0 <= density_2d(smaller) <= density_2d(A) <= 1


def test_members_with_prefix():
    A = GridTreeSet.full(2, 4)
    found = list(A.members_with_prefix(pair("1,0"), 2, 1))
    assert found == [pair("10,0"), pair("11,0")]
    E = GridTreeSet.explicit(2, 4, [pair("10,0"), pair("01,0"), pair("11,1")])
    assert list(E.members_with_prefix(pair("1,-"), 2, 1)) == [pair("10,0"), pair("11,1")]


def test_density_sequence():
    S = level_mask_1d(2, 4, [0, 2])
    assert density_sequence(S) == [1, Fraction(1, 2), Fraction(2, 3), Fraction(1, 2)]
    A = level_lift(GridSet(3, {(0, 0)}), 2)
    assert density_sequence(A) == [1, Fraction(1, 4), Fraction(1, 9)]


def test_translate_and_shift():
    A = GridTreeSet.explicit(2, 3, [pair("0,1"), pair("10,-")])
    alpha = pair("1,-")
    T = translate(A, alpha)
    assert T.depth == 4
    assert set(T.iter_members()) == {pair("10,1"), pair("110,-")}
    assert set(shift(T, alpha).iter_members()) == set(A.iter_members())
    assert set(shift(A, alpha).iter_members()) == {pair("0,-")}


def test_shift_level_lift_moves_cells():
    A = level_lift(GridSet(4, {(2, 1), (0, 3)}), 2)
    shifted = shift(A, pair("0,1"))
    assert shifted.representation == Representation.LEVEL_LIFT
    assert shifted.cells == frozenset({(1, 0)})


def test_restrict():
    A = GridTreeSet.explicit(2, 3, [pair("-,-"), pair("01,1")])
    assert set(A.restrict(2).iter_members()) == {pair("-,-")}


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2 ** 32), st.fractions(0, 1))
def test_densities_in_unit_interval(N, seed, delta):
    A = random_grid_set(N, 2, delta, seed)
    assert 0 <= density_2d(A) <= 1
    S = random_tree_set(N, 2, delta, seed)
    assert 0 <= density_1d(S) <= 1


def test_tree_set_rejects_deep_words():
    with pytest.raises(ValueError):
        TreeSet.explicit(2, 2, [w("01")])
