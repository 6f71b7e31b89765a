#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Tests for words, pairs and free-product words.
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tree_ramsey.errors import AlphabetMismatchError, EnumerationCapError
from tree_ramsey.semigroup import (FreeWord, PairWord, Word, act_free, ball_size, concat_words,
                                   enumerate_ball, enumerate_free_ball, enumerate_sphere,
                                   free_ball_size, is_descendent, left_multiply, project_free,
                                   shortlex_index, word_from_index)


def words(k: int, max_len: int = 6):
    return st.lists(st.integers(0, k - 1), max_size=max_len).map(lambda xs: Word(k, tuple(xs)))


def free_words(k: int, max_len: int = 6):
    token = st.tuples(st.integers(0, 1), st.integers(0, k - 1))
    return st.lists(token, max_size=max_len).map(lambda ts: FreeWord(k, tuple(ts)))


def w(text: str, k: int = 2) -> Word:
    return Word.parse(k, text)


def test_concat_identity_and_definition():
    assert concat_words(Word.empty(2), w("01")) == w("01")
    assert concat_words(w("01"), w("1")) == w("011")
    assert w("01") + w("") == w("01")


def test_concat_lengths_random_pairs():
    rng = random.Random(5)
    for _ in range(100):
        k = rng.randint(1, 4)
        a = Word(k, tuple(rng.randrange(k) for _ in range(rng.randint(0, 7))))
        b = Word(k, tuple(rng.randrange(k) for _ in range(rng.randint(0, 7))))
        assert len(concat_words(a, b)) == len(a) + len(b)


def test_concat_alphabet_mismatch():
    with pytest.raises(AlphabetMismatchError):
        concat_words(Word(2, (1,)), Word(3, (2,)))


def test_is_descendent_examples():
    assert is_descendent(w("011"), w("01")) == w("1")
    assert is_descendent(w("01"), w("01")) == Word.empty(2)
    assert is_descendent(w("01"), w("1")) is None


def test_is_descendent_on_pairs():
    g = PairWord(w("010"), w("1"))
    assert is_descendent(g, PairWord(w("0"), w(""))) == PairWord(w("10"), w("1"))
    assert is_descendent(g, PairWord(w("1"), w(""))) is None


def test_is_descendent_roundtrip_exhaustive():
    ball = enumerate_ball(2, 4)
    for a in ball:
        for t in ball:
            assert is_descendent(concat_words(a, t), a) == t


def test_enumerate_sphere_examples():
    assert enumerate_sphere(2, 0) == [Word.empty(2)]
    assert [str(x) for x in enumerate_sphere(2, 2)] == ["00", "01", "10", "11"]
    assert len(enumerate_sphere(3, 4)) == 81


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_sphere_counts(k):
    for r in range(9):
        assert len(enumerate_sphere(k, r)) == k ** r


def test_enumerate_ball_is_shortlex():
    ball = enumerate_ball(2, 3)
    assert len(ball) == ball_size(2, 3) == 15
    assert ball == sorted(ball, key=Word.sort_key)
    assert [shortlex_index(x) for x in ball] == list(range(15))


def test_enumeration_cap(monkeypatch):
    from tree_ramsey import config
    monkeypatch.setattr(config, "_active_settings", config.Settings(enumeration_cap=100))
    with pytest.raises(EnumerationCapError) as excinfo:
        enumerate_sphere(2, 7)
    assert excinfo.value.requested == 128
    assert excinfo.value.cap == 100


def test_enumerate_free_ball_examples():
    assert [str(t) for t in enumerate_free_ball(1, 1)] == ["", "x0", "y0"]
    assert len(enumerate_free_ball(2, 2)) == 21 == free_ball_size(2, 2)
    assert FreeWord.parse(2, "x0.y1.x0").level == (2, 1)


def test_free_ball_orders_x_before_y():
    ball = enumerate_free_ball(2, 1)
    assert [str(t) for t in ball] == ["", "x0", "x1", "y0", "y1"]


def test_act_free_example():
    g = act_free(PairWord.identity(2), FreeWord.parse(2, "x0.y1"))
    assert g == PairWord(w("0"), w("1"))


def test_projection_preserves_levels_exhaustive():
    ball = enumerate_free_ball(2, 3)
    assert len(ball) == 1 + 4 + 16 + 64
    for t in enumerate_free_ball(2, 4):
        assert project_free(t).level == t.level


@settings(max_examples=100)
@given(st.data())
def test_act_free_is_an_action(data):
    k = data.draw(st.integers(1, 3))
    g = PairWord(data.draw(words(k)), data.draw(words(k)))
    s = data.draw(free_words(k))
    t = data.draw(free_words(k))
    assert act_free(act_free(g, s), t) == act_free(g, s + t)
    assert act_free(g, FreeWord.empty(k)) == g
    assert act_free(g, t).level == (g.level[0] + t.level[0], g.level[1] + t.level[1])


@given(words(3, 8))
def test_shortlex_index_roundtrip(x):
    assert word_from_index(3, shortlex_index(x)) == x


def test_left_multiply():
    alpha = PairWord(w("1"), w("0"))
    assert left_multiply(alpha, PairWord(w("01"), w(""))) == PairWord(w("101"), w("0"))


def test_parse_and_format():
    assert str(Word.empty(2)) == "-"
    assert Word.parse(2, "-") == Word.empty(2)
    assert str(PairWord.parse(2, "01,-")) == "01,-"
    assert str(FreeWord.parse(3, "y2.x0")) == "y2.x0"
    with pytest.raises(ValueError):
        Word.parse(2, "012")
    with pytest.raises(ValueError):
        FreeWord.parse(2, "z0")
