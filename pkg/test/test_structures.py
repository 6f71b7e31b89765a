#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Tests for witness verifiers and witness helpers.
"""

import random

import pytest

from tree_ramsey.errors import WitnessFormatError
from tree_ramsey.semigroup import FreeWord, PairWord, Word, enumerate_ball, enumerate_free_ball
from tree_ramsey.sets import GridTreeSet, TreeSet, random_grid_set, translate
from tree_ramsey.structures import (DESCENT, INJECTIVITY, LEVEL, MEMBERSHIP, ROW_LEVEL,
                                    CartesianProductWitness, ProductTreeWitness,
                                    RegularEmbeddingWitness, TreeArrayWitness, TreeWitness,
                                    identity_tree_witness, infer_product_parameters,
                                    infer_tree_parameters, level_pattern,
                                    product_witness_from_cartesian, translate_product_witness,
                                    tree_to_regular_embedding, verify_arithmetic_subtree,
                                    verify_cartesian_product, verify_product_tree,
                                    verify_regular_embedding, verify_tree_array)


def w(text: str, k: int = 2) -> Word:
    return Word.parse(k, text)


def pair(text: str, k: int = 2) -> PairWord:
    return PairWord.parse(k, text)


def ft(text: str, k: int = 2) -> FreeWord:
    return FreeWord.parse(k, text)


def random_tree_witness(rng: random.Random, k: int, r: int, q: int) -> TreeWitness:
    """A passing arithmetic subtree built from random padding letters."""
    root = Word(k, tuple(rng.randrange(k) for _ in range(rng.randint(0, 2))))
    mapping = {Word.empty(k): root}
    for address in enumerate_ball(k, r):
        if not address.letters:
            continue
        parent = mapping[address.parent()]
        tail = tuple(rng.randrange(k) for _ in range(q - 1))
        mapping[address] = Word(k, parent.letters + (address.last_letter,) + tail)
    return TreeWitness(k, r, q, mapping)


def random_product_witness(rng: random.Random, k: int, r: int, u, v) -> ProductTreeWitness:
    mapping = {FreeWord.empty(k): PairWord(Word(k, (rng.randrange(k),)), Word.empty(k))}
    for t in enumerate_free_ball(k, r):
        if not t.tokens:
            continue
        axis, letter = t.last_token
        inc = u if axis == 0 else v
        g = mapping[t.parent()]
        first, second = list(g.first.letters), list(g.second.letters)
        if axis == 0:
            first.append(letter)
            first += [rng.randrange(k) for _ in range(inc[0] - 1)]
            second += [rng.randrange(k) for _ in range(inc[1])]
        else:
            second.append(letter)
            second += [rng.randrange(k) for _ in range(inc[1] - 1)]
            first += [rng.randrange(k) for _ in range(inc[0])]
        mapping[t] = PairWord(Word(k, tuple(first)), Word(k, tuple(second)))
    return ProductTreeWitness(k, r, u, v, mapping)


def test_order_zero_tree_is_a_point():
    S = TreeSet.explicit(2, 3, [w("01")])
    assert verify_arithmetic_subtree(TreeWitness(2, 0, 1, {w(""): w("01")}), S)
    assert not verify_arithmetic_subtree(TreeWitness(2, 0, 1, {w(""): w("1")}), S)


def test_full_tree_is_arithmetic():
    S = TreeSet.full(2, 2)
    witness = identity_tree_witness(2, 1)
    verdict = verify_arithmetic_subtree(witness, S)
    assert verdict.passed
    assert str(verdict) == "PASS"


def test_descent_violation_reports_address():
    S = TreeSet.full(2, 2)
    mapping = {w(""): w(""), w("0"): w("0"), w("1"): w("01")}
    verdict = verify_arithmetic_subtree(TreeWitness(2, 1, 1, mapping), S)
    assert not verdict
    assert verdict.condition == DESCENT
    assert verdict.address == "1"


def test_membership_violation():
    S = TreeSet.explicit(2, 3, [w(""), w("0")])
    verdict = verify_arithmetic_subtree(identity_tree_witness(2, 1), S)
    assert verdict.condition == MEMBERSHIP
    assert verdict.address == "1"


def test_gap_must_be_positive():
    verdict = verify_arithmetic_subtree(TreeWitness(2, 1, 0, {w(""): w(""), w("0"): w(""), w("1"): w("")}),
                                        TreeSet.full(2, 2))
    assert verdict.condition == "gap"


def test_partial_map_is_malformed():
    with pytest.raises(WitnessFormatError):
        verify_arithmetic_subtree(TreeWitness(2, 1, 1, {w(""): w("")}), TreeSet.full(2, 2))


def test_regular_embedding_examples():
    S = TreeSet.full(2, 3)
    identity = {x: x for x in enumerate_ball(2, 2)}
    assert verify_regular_embedding(RegularEmbeddingWitness(2, 2, identity), S)

    collapsed = {w(""): w(""), w("0"): w("0"), w("1"): w("0")}
    verdict = verify_regular_embedding(RegularEmbeddingWitness(2, 1, collapsed), S)
    assert verdict.condition == INJECTIVITY
    assert verdict.address == "1"


def test_regular_embedding_schedule():
    mapping = {w(""): w("1"), w("0"): w("100"), w("1"): w("110")}
    witness = RegularEmbeddingWitness(2, 1, mapping)
    assert witness.schedule == [1, 3]
    assert verify_regular_embedding(witness, TreeSet.full(2, 4))


def test_regular_embedding_rejects_split_level():
    mapping = {w(""): w(""), w("0"): w("0"), w("1"): w("10")}
    verdict = verify_regular_embedding(RegularEmbeddingWitness(2, 1, mapping), TreeSet.full(2, 3))
    assert verdict.condition == LEVEL


def test_passing_tree_witnesses_are_regular_and_injective():
    rng = random.Random(17)
    for _ in range(100):
        k = rng.randint(1, 3)
        r = rng.randint(0, 2)
        q = rng.randint(1, 3)
        witness = random_tree_witness(rng, k, r, q)
        S = TreeSet.explicit(k, 2 + r * q + 1, witness.mapping.values())
        assert verify_arithmetic_subtree(witness, S)
        assert verify_regular_embedding(tree_to_regular_embedding(witness), S)
        assert len(set(witness.mapping.values())) == len(witness.mapping)
        assert infer_tree_parameters(k, witness.mapping) == (r, q if r else 1)


def test_tree_array_examples():
    A = GridTreeSet.full(2, 2)
    rows = (w(""), w("0"))
    maps = tuple({x: x for x in enumerate_ball(2, 1)} for _ in rows)
    assert verify_tree_array(TreeArrayWitness(2, 1, 1, 0, 0, rows, maps), GridTreeSet.full(2, 3))
    assert verify_tree_array(TreeArrayWitness(2, 1, 1, 0, 0, rows, maps), A)

    bad_rows = (w(""), w("00"))
    verdict = verify_tree_array(TreeArrayWitness(2, 1, 1, 0, 0, bad_rows, maps), GridTreeSet.full(2, 3))
    assert verdict.condition == ROW_LEVEL
    assert verdict.address == "1/"


def test_tree_array_row_count():
    maps = ({x: x for x in enumerate_ball(2, 1)},)
    with pytest.raises(WitnessFormatError):
        verify_tree_array(TreeArrayWitness(2, 1, 1, 0, 0, (w(""),), maps), GridTreeSet.full(2, 3))


def test_tree_array_slice_membership():
    A = GridTreeSet.explicit(2, 2, [pair("-,-"), pair("0,-"), pair("1,-"), pair("-,0"), pair("0,0")])
    rows = (w(""), w("0"))
    maps = tuple({x: x for x in enumerate_ball(2, 1)} for _ in rows)
    verdict = verify_tree_array(TreeArrayWitness(2, 1, 1, 0, 0, rows, maps), A)
    assert verdict.condition == MEMBERSHIP
    assert verdict.address == "1/1"


def test_product_tree_examples():
    A = GridTreeSet.full(1, 3)
    mapping = {
        ft("", 1): pair("-,-", 1),
        ft("x0", 1): pair("0,0", 1),
        ft("y0", 1): pair("0,0", 1),
    }
    assert verify_product_tree(ProductTreeWitness(1, 1, (1, 1), (1, 1), mapping), A)

    perturbed = dict(mapping)
    perturbed[ft("x0", 1)] = pair("00,-", 1)
    verdict = verify_product_tree(ProductTreeWitness(1, 1, (1, 1), (1, 1), perturbed), A)
    assert verdict.condition == LEVEL
    assert verdict.address == "x0"


def test_product_tree_order_zero():
    A = GridTreeSet.explicit(2, 3, [pair("1,01")])
    assert verify_product_tree(ProductTreeWitness(2, 0, (1, 1), (1, 1), {ft(""): pair("1,01")}), A)


def test_product_tree_descent():
    A = GridTreeSet.full(2, 3)
    mapping = {FreeWord.empty(2): pair("-,-")}
    for t in enumerate_free_ball(2, 1)[1:]:
        mapping[t] = pair("0,0")
    verdict = verify_product_tree(ProductTreeWitness(2, 1, (1, 1), (1, 1), mapping), A)
    assert verdict.condition == DESCENT
    assert verdict.address == "x1"


def test_translation_stability():
    rng = random.Random(23)
    for _ in range(100):
        k = rng.randint(1, 2)
        r = rng.randint(0, 2)
        u = (rng.randint(1, 2), rng.randint(1, 2))
        v = (rng.randint(1, 2), rng.randint(1, 2))
        witness = random_product_witness(rng, k, r, u, v)
        depth = 1 + 2 * r + 1
        A = GridTreeSet.explicit(k, depth, witness.mapping.values())
        assert verify_product_tree(witness, A)
        assert infer_product_parameters(k, witness.mapping) == ((r, u, v) if r else (0, (1, 1), (1, 1)))
        alpha = PairWord(Word(k, tuple(rng.randrange(k) for _ in range(rng.randint(0, 2)))),
                         Word(k, tuple(rng.randrange(k) for _ in range(rng.randint(0, 2)))))
        moved = translate_product_witness(witness, alpha)
        assert verify_product_tree(moved, translate(A, alpha))


def test_level_pattern():
    A = GridTreeSet.full(1, 3)
    mapping = {ft("", 1): pair("-,-", 1), ft("x0", 1): pair("0,0", 1), ft("y0", 1): pair("0,0", 1)}
    witness = ProductTreeWitness(1, 1, (1, 1), (1, 1), mapping)
    assert verify_product_tree(witness, A)
    assert level_pattern(witness) == {(0, 0), (1, 1)}


def test_cartesian_product_and_factoring():
    A = GridTreeSet.full(2, 3)
    tree = {x: x for x in enumerate_ball(2, 1)}
    witness = CartesianProductWitness(2, 1, 1, tree, dict(tree))
    assert verify_cartesian_product(witness, A)
    product = product_witness_from_cartesian(witness)
    assert (product.u, product.v) == ((1, 0), (0, 1))
    assert verify_product_tree(product, A)

    holed = random_grid_set(3, 2, 1, seed=0)
    holed = GridTreeSet.explicit(2, 3, [g for g in holed.iter_members() if g != pair("1,0")])
    verdict = verify_cartesian_product(witness, holed)
    assert verdict.condition == MEMBERSHIP
    assert verdict.address == "1,0"
