#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Witness types and independent verifiers.

Four structures are certified by explicit maps:

    TreeWitness              arithmetic subtree of order r and gap q in S ⊂ T_N
    RegularEmbeddingWitness  injective level-preserving embedding of T_d in S
    TreeArrayWitness         r+1 horizontal arithmetic subtrees sharing a gap
    ProductTreeWitness       (u, v)-arithmetic product tree in A ⊂ T_N × T_N

Verifiers re-check every parameter carried by a witness and return a Verdict.
A failing Verdict names the first violating address in shortlex order (X tokens
before Y tokens) and the condition that broke. Only a malformed witness (a map
that is not total on its domain) raises.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import AlphabetMismatchError, PreconditionError, WitnessFormatError
from .semigroup import (X_AXIS, FreeWord, PairWord, Word, act_free, enumerate_ball,
                        enumerate_free_ball, format_word, is_descendent, left_multiply)
from .sets import GridTreeSet, TreeSet, slice_at

logger = logging.getLogger(__name__)

Increment = Tuple[int, int]

DESCENT = "descent"
GAP = "gap"
MEMBERSHIP = "membership"
INJECTIVITY = "injectivity"
LEVEL = "level"
ROW_LEVEL = "row-level"
COLUMN_LEVEL = "column-level"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verification. Truthy exactly when the witness passes."""

    passed: bool
    condition: Optional[str] = None
    address: Optional[str] = None
    detail: str = ""

    @classmethod
    def ok(cls) -> "Verdict":
        return cls(True)

    @classmethod
    def fail(cls, condition: str, address: str, detail: str = "") -> "Verdict":
        return cls(False, condition, address, detail)

    def __bool__(self) -> bool:
        return self.passed

    def __str__(self) -> str:
        if self.passed:
            return "PASS"
        where = self.address if self.address else "∅"
        text = f"FAIL {self.condition} at {where}"
        return f"{text}: {self.detail}" if self.detail else text


@dataclass(frozen=True)
class TreeWitness:
    k: int
    r: int
    q: int
    mapping: Mapping[Word, Word] = field(default_factory=dict, hash=False)

    kind = "tree"

    @property
    def root(self) -> Word:
        return self.mapping[Word.empty(self.k)]

    def image(self, address: Word) -> Word:
        return self.mapping[address]

    def addresses(self) -> List[Word]:
        return sorted(self.mapping, key=Word.sort_key)


@dataclass(frozen=True)
class RegularEmbeddingWitness:
    k: int
    d: int
    mapping: Mapping[Word, Word] = field(default_factory=dict, hash=False)

    kind = "regular"

    def addresses(self) -> List[Word]:
        return sorted(self.mapping, key=Word.sort_key)

    @property
    def schedule(self) -> Optional[List[int]]:
        """Image level n_i of each tree level i, or None if some level is split."""
        levels: Dict[int, int] = {}
        for address, image in self.mapping.items():
            if levels.setdefault(len(address), len(image)) != len(image):
                return None
        return [levels[i] for i in sorted(levels)]


@dataclass(frozen=True)
class TreeArrayWitness:
    k: int
    r: int
    q: int
    c1: int
    c2: int
    rows: Tuple[Word, ...] = ()
    maps: Tuple[Mapping[Word, Word], ...] = field(default=(), hash=False)

    kind = "array"

    def row_witness(self, j: int) -> TreeWitness:
        return TreeWitness(self.k, self.r, self.q, self.maps[j])

    def image(self, address: Word, j: int) -> PairWord:
        return PairWord(self.maps[j][address], self.rows[j])


@dataclass(frozen=True)
class ProductTreeWitness:
    k: int
    r: int
    u: Increment
    v: Increment
    mapping: Mapping[FreeWord, PairWord] = field(default_factory=dict, hash=False)

    kind = "product"

    @property
    def root(self) -> PairWord:
        return self.mapping[FreeWord.empty(self.k)]

    def addresses(self) -> List[FreeWord]:
        return sorted(self.mapping, key=FreeWord.sort_key)


@dataclass(frozen=True)
class CartesianProductWitness:
    """φ1 × φ2: two arithmetic subtrees with one gap whose product lies in A."""

    k: int
    r: int
    q: int
    first: Mapping[Word, Word] = field(default_factory=dict, hash=False)
    second: Mapping[Word, Word] = field(default_factory=dict, hash=False)

    kind = "cartesian"


def _check_total(mapping: Mapping, domain: Iterable, what: str) -> None:
    domain = set(domain)
    keys = set(mapping)
    missing = domain - keys
    if missing:
        first = min(missing, key=lambda a: a.sort_key())
        raise WitnessFormatError(f"{what} map is not total: no image for address {first!r}")
    extra = keys - domain
    if extra:
        first = min(extra, key=lambda a: a.sort_key())
        raise WitnessFormatError(f"{what} map has an address outside its domain: {first!r}")


def _check_images(mapping: Mapping, k: int, image_type: type) -> None:
    for image in mapping.values():
        if not isinstance(image, image_type):
            raise WitnessFormatError(f"image {image!r} is not a {image_type.__name__}")
        if image.k != k:
            raise AlphabetMismatchError(k, image.k)


def _addr(w: Word) -> str:
    return format_word(w)


def _arithmetic_conditions(k: int, r: int, q: int, mapping: Mapping[Word, Word],
                           contains) -> Verdict:
    """Checks over B_r in shortlex order: descent, gap, then membership."""
    if r >= 1 and q < 1:
        return Verdict.fail(GAP, "", f"gap must be at least 1 for order {r}, got {q}")
    for address in enumerate_ball(k, r):
        image = mapping[address]
        if address.letters:
            parent = address.parent()
            letter = address.last_letter
            parent_image = mapping[parent]
            if is_descendent(image, parent_image.child(letter)) is None:
                return Verdict.fail(
                    DESCENT, _addr(address),
                    f"image {image} of ({parent}, {letter}) does not descend from {parent_image.child(letter)}")
            if len(image) != len(parent_image) + q:
                return Verdict.fail(
                    GAP, _addr(address),
                    f"|φ({address})| = {len(image)}, expected {len(parent_image)} + {q}")
        if not contains(image):
            return Verdict.fail(MEMBERSHIP, _addr(address), f"image {image} is not in the set")
    return Verdict.ok()


def verify_arithmetic_subtree(w: TreeWitness, A: TreeSet) -> Verdict:
    if w.k != A.k:
        raise AlphabetMismatchError(w.k, A.k)
    if w.r < 0:
        raise WitnessFormatError(f"order must be non-negative, got {w.r}")
    _check_total(w.mapping, enumerate_ball(w.k, w.r), "tree")
    _check_images(w.mapping, w.k, Word)
    return _arithmetic_conditions(w.k, w.r, w.q, w.mapping, A.contains)


def verify_regular_embedding(w: RegularEmbeddingWitness, S: TreeSet) -> Verdict:
    if w.k != S.k:
        raise AlphabetMismatchError(w.k, S.k)
    if w.d < 0:
        raise WitnessFormatError(f"depth must be non-negative, got {w.d}")
    domain = enumerate_ball(w.k, w.d)
    _check_total(w.mapping, domain, "embedding")
    _check_images(w.mapping, w.k, Word)

    seen: Dict[Word, Word] = {}
    levels: List[int] = []
    for address in domain:
        image = w.mapping[address]
        if image in seen:
            return Verdict.fail(INJECTIVITY, _addr(address),
                                f"image {image} already used by {seen[image]}")
        seen[image] = address
        depth = len(address)
        if depth == len(levels):
            if levels and len(image) <= levels[-1]:
                return Verdict.fail(LEVEL, _addr(address),
                                    f"level {depth} maps to {len(image)}, not above {levels[-1]}")
            levels.append(len(image))
        elif len(image) != levels[depth]:
            return Verdict.fail(LEVEL, _addr(address),
                                f"level {depth} maps to both {levels[depth]} and {len(image)}")
        if address.letters:
            parent_image = w.mapping[address.parent()]
            target = parent_image.child(address.last_letter)
            if is_descendent(image, target) is None:
                return Verdict.fail(DESCENT, _addr(address),
                                    f"image {image} does not descend from {target}")
        if not S.contains(image):
            return Verdict.fail(MEMBERSHIP, _addr(address), f"image {image} is not in the set")
    return Verdict.ok()


def verify_tree_array(w: TreeArrayWitness, A: GridTreeSet) -> Verdict:
    if w.k != A.k:
        raise AlphabetMismatchError(w.k, A.k)
    if w.r < 0:
        raise WitnessFormatError(f"order must be non-negative, got {w.r}")
    if len(w.rows) != w.r + 1 or len(w.maps) != w.r + 1:
        raise WitnessFormatError(
            f"tree array of order {w.r} needs {w.r + 1} rows, got {len(w.rows)} words and {len(w.maps)} maps")
    if w.c1 < 0 or w.c2 < 0:
        raise WitnessFormatError(f"level constants must be non-negative, got c1={w.c1} c2={w.c2}")
    domain = enumerate_ball(w.k, w.r)

    assembled: Dict[PairWord, str] = {}
    for j, (y, mapping) in enumerate(zip(w.rows, w.maps)):
        if y.k != w.k:
            raise AlphabetMismatchError(w.k, y.k)
        _check_total(mapping, domain, f"row {j}")
        _check_images(mapping, w.k, Word)
        if len(y) != w.q * j + w.c2:
            return Verdict.fail(ROW_LEVEL, f"{j}/",
                                f"|y_{j}| = {len(y)}, expected {w.q}*{j} + {w.c2}")
        if len(y) >= A.depth:
            return Verdict.fail(MEMBERSHIP, f"{j}/", f"row word {y} lies outside depth {A.depth}")
        verdict = _arithmetic_conditions(w.k, w.r, w.q, mapping, slice_at(A, y).contains)
        if not verdict:
            return Verdict.fail(verdict.condition, f"{j}/{verdict.address}", verdict.detail)
        for address in domain:
            image = mapping[address]
            expected = w.q * len(address) + w.c1
            if len(image) != expected:
                return Verdict.fail(COLUMN_LEVEL, f"{j}/{_addr(address)}",
                                    f"|φ_{j}({address})| = {len(image)}, expected {expected}")
            point = PairWord(image, y)
            here = f"{j}/{_addr(address)}"
            if point in assembled:
                return Verdict.fail(INJECTIVITY, here, f"{point} already used by {assembled[point]}")
            assembled[point] = here
    return Verdict.ok()


def _check_increment(inc: Sequence[int], name: str) -> Increment:
    if len(inc) != 2 or any(int(c) != c or c < 0 for c in inc):
        raise WitnessFormatError(f"increment {name} must be a pair of non-negative integers, got {inc!r}")
    return (int(inc[0]), int(inc[1]))


def verify_product_tree(w: ProductTreeWitness, A: GridTreeSet) -> Verdict:
    if w.k != A.k:
        raise AlphabetMismatchError(w.k, A.k)
    if w.r < 0:
        raise WitnessFormatError(f"order must be non-negative, got {w.r}")
    u = _check_increment(w.u, "u")
    v = _check_increment(w.v, "v")
    domain = enumerate_free_ball(w.k, w.r)
    _check_total(w.mapping, domain, "product tree")
    _check_images(w.mapping, w.k, PairWord)

    for address in domain:
        image = w.mapping[address]
        if address.tokens:
            axis, letter = address.last_token
            parent_image = w.mapping[address.parent()]
            inc = u if axis == X_AXIS else v
            i, j = parent_image.level
            expected = (i + inc[0], j + inc[1])
            if image.level != expected:
                return Verdict.fail(LEVEL, str(address),
                                    f"Level(φ({address})) = {image.level}, expected {expected}")
            step = FreeWord._make(w.k, ((axis, letter),))
            target = act_free(parent_image, step)
            if is_descendent(image, target) is None:
                return Verdict.fail(DESCENT, str(address),
                                    f"image {image} does not descend from {target}")
        if not A.contains(image):
            return Verdict.fail(MEMBERSHIP, str(address), f"image {image} is not in the set")
    return Verdict.ok()


def verify_cartesian_product(w: CartesianProductWitness, A: GridTreeSet) -> Verdict:
    """Both factors arithmetic with the shared gap, and φ1(a) × φ2(b) ⊂ A."""
    if w.k != A.k:
        raise AlphabetMismatchError(w.k, A.k)
    domain = enumerate_ball(w.k, w.r)
    for name, mapping in (("x", w.first), ("y", w.second)):
        _check_total(mapping, domain, f"{name} factor")
        _check_images(mapping, w.k, Word)
        verdict = _arithmetic_conditions(w.k, w.r, w.q, mapping, lambda image: True)
        if not verdict:
            return Verdict.fail(verdict.condition, f"{name}:{verdict.address}", verdict.detail)
    for a in domain:
        for b in domain:
            point = PairWord(w.first[a], w.second[b])
            if not A.contains(point):
                return Verdict.fail(MEMBERSHIP, f"{_addr(a)},{_addr(b)}", f"image {point} is not in the set")
    return Verdict.ok()


def infer_tree_parameters(k: int, mapping: Mapping[Word, Word]) -> Tuple[int, int]:
    """Recover (r, q) from a tree map; q defaults to 1 for a bare root."""
    if not mapping:
        raise WitnessFormatError("empty tree map")
    r = max(len(address) for address in mapping)
    root = mapping.get(Word.empty(k))
    if root is None:
        raise WitnessFormatError("tree map has no root image")
    if r == 0:
        return 0, 1
    first_child = mapping.get(Word._make(k, (0,)))
    if first_child is None:
        raise WitnessFormatError("tree map has no image for address 0")
    return r, len(first_child) - len(root)


def infer_product_parameters(k: int, mapping: Mapping[FreeWord, PairWord]) -> Tuple[int, Increment, Increment]:
    """Recover (r, u, v) from a product-tree map; increments default to (1, 1)."""
    if not mapping:
        raise WitnessFormatError("empty product tree map")
    r = max(len(address) for address in mapping)
    root = mapping.get(FreeWord.empty(k))
    if root is None:
        raise WitnessFormatError("product tree map has no root image")
    if r == 0:
        return 0, (1, 1), (1, 1)
    increments = []
    for make in (FreeWord.x, FreeWord.y):
        child = mapping.get(make(k, 0))
        if child is None:
            raise WitnessFormatError(f"product tree map has no image for {make(k, 0)}")
        increments.append((child.level[0] - root.level[0], child.level[1] - root.level[1]))
    return r, increments[0], increments[1]


def tree_to_regular_embedding(w: TreeWitness) -> RegularEmbeddingWitness:
    return RegularEmbeddingWitness(w.k, w.r, dict(w.mapping))


def translate_product_witness(w: ProductTreeWitness, alpha: PairWord) -> ProductTreeWitness:
    """γ ↦ α·φ(γ), a product tree in the translated set α·A."""
    if alpha.k != w.k:
        raise AlphabetMismatchError(w.k, alpha.k)
    return ProductTreeWitness(w.k, w.r, w.u, w.v,
                              {t: left_multiply(alpha, g) for t, g in w.mapping.items()})


def product_witness_from_cartesian(w: CartesianProductWitness) -> ProductTreeWitness:
    """Read φ1 × φ2 through Γ̃ → Γ as a ((q, 0), (0, q)) product tree."""
    mapping: Dict[FreeWord, PairWord] = {}
    for t in enumerate_free_ball(w.k, w.r):
        xs = tuple(letter for axis, letter in t.tokens if axis == X_AXIS)
        ys = tuple(letter for axis, letter in t.tokens if axis != X_AXIS)
        mapping[t] = PairWord(w.first[Word._make(w.k, xs)], w.second[Word._make(w.k, ys)])
    return ProductTreeWitness(w.k, w.r, (w.q, 0), (0, w.q), mapping)


def level_pattern(w: ProductTreeWitness) -> FrozenSet[Tuple[int, int]]:
    """{Level(root) + x·u + y·v : x + y ≤ r}, the levels a passing witness occupies."""
    i0, j0 = w.root.level
    return frozenset(
        (i0 + x * w.u[0] + y * w.v[0], j0 + x * w.u[1] + y * w.v[1])
        for x in range(w.r + 1) for y in range(w.r + 1 - x))


def identity_tree_witness(k: int, r: int) -> TreeWitness:
    """The full tree B_r as its own arithmetic subtree with gap 1."""
    if r < 0:
        raise PreconditionError(f"order must be non-negative, got {r}")
    return TreeWitness(k, r, 1, {w: w for w in enumerate_ball(k, r)})
