#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Finite subsets of the tree T_N and of T_N × T_N with exact densities.

A depth-N set occupies levels 0..N-1 in every coordinate. Densities are exact
Fractions:

    d_N(S) = (1/N)   Σ_{x∈S}     k^{-|x|}
    d_N(A) = (1/N^2) Σ_{(x,y)∈A} k^{-|x|-|y|}
"""

import bisect
import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import (Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional,
                    Tuple, Union)

import numpy as np

from .errors import AlphabetMismatchError, PreconditionError
from .semigroup import (AlphabetLike, PairWord, Word, alphabet_size, ball_size, check_cap,
                        is_descendent, iter_sphere, left_multiply)

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]


class Representation(str, Enum):
    EXPLICIT = "explicit"
    LEVEL_LIFT = "levellift"
    PREDICATE = "predicate"


def _extensions(k: int, prefix: Tuple[int, ...], length: int) -> Iterator[Tuple[int, ...]]:
    """All letter tuples of the given length starting with prefix, lexicographic."""
    missing = length - len(prefix)
    if missing < 0:
        return
    for tail in itertools.product(range(k), repeat=missing):
        yield prefix + tail


def _prefix_range(rows: List[Tuple[int, ...]], prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """Iterate the sorted rows that start with prefix."""
    start = bisect.bisect_left(rows, prefix)
    n = len(prefix)
    for row in itertools.islice(rows, start, None):
        if row[:n] != prefix:
            break
        yield row


@dataclass(frozen=True)
class TreeSet:
    """A subset of T_N given explicitly or as a union of full levels (a level mask)."""

    k: int
    depth: int
    representation: Representation = Representation.EXPLICIT
    members: FrozenSet[Word] = frozenset()
    levels: FrozenSet[int] = frozenset()

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"alphabet size must be positive, got {self.k}")
        if self.depth < 1:
            raise ValueError(f"depth must be positive, got {self.depth}")
        if self.representation == Representation.EXPLICIT:
            object.__setattr__(self, "members", frozenset(self.members))
            for w in self.members:
                if w.k != self.k:
                    raise AlphabetMismatchError(self.k, w.k)
                if len(w) >= self.depth:
                    raise ValueError(f"word {w} has length {len(w)} >= depth {self.depth}")
        elif self.representation == Representation.LEVEL_LIFT:
            object.__setattr__(self, "levels", frozenset(self.levels))
            for level in self.levels:
                if not 0 <= level < self.depth:
                    raise ValueError(f"level {level} outside [0, {self.depth})")
        else:
            raise ValueError(f"tree sets support explicit and levellift only, got {self.representation}")

    @classmethod
    def explicit(cls, k: AlphabetLike, depth: int, members: Iterable[Word]) -> "TreeSet":
        return cls(alphabet_size(k), depth, Representation.EXPLICIT, members=frozenset(members))

    @classmethod
    def level_mask(cls, k: AlphabetLike, depth: int, levels: Iterable[int]) -> "TreeSet":
        return cls(alphabet_size(k), depth, Representation.LEVEL_LIFT, levels=frozenset(levels))

    @classmethod
    def full(cls, k: AlphabetLike, depth: int) -> "TreeSet":
        return cls.level_mask(k, depth, range(depth))

    @cached_property
    def _rows_by_level(self) -> Dict[int, List[Tuple[int, ...]]]:
        rows: Dict[int, List[Tuple[int, ...]]] = {}
        for w in self.members:
            rows.setdefault(len(w), []).append(w.letters)
        for level_rows in rows.values():
            level_rows.sort()
        return rows

    def __contains__(self, w: Word) -> bool:
        return self.contains(w)

    def __len__(self) -> int:
        return sum(self.count_at_level(i) for i in range(self.depth))

    def contains(self, w: Word) -> bool:
        if w.k != self.k:
            raise AlphabetMismatchError(self.k, w.k)
        if len(w) >= self.depth:
            return False
        if self.representation == Representation.LEVEL_LIFT:
            return len(w) in self.levels
        return w in self.members

    def count_at_level(self, i: int) -> int:
        if not 0 <= i < self.depth:
            return 0
        if self.representation == Representation.LEVEL_LIFT:
            return self.k ** i if i in self.levels else 0
        return len(self._rows_by_level.get(i, ()))

    def occupied_levels(self) -> List[int]:
        if self.representation == Representation.LEVEL_LIFT:
            return sorted(self.levels)
        return sorted(self._rows_by_level)

    def members_with_prefix(self, prefix: Word, level: int) -> Iterator[Word]:
        """Members at the given level that extend prefix, lexicographic."""
        if not 0 <= level < self.depth or len(prefix) > level:
            return
        if self.representation == Representation.LEVEL_LIFT:
            if level in self.levels:
                for letters in _extensions(self.k, prefix.letters, level):
                    yield Word._make(self.k, letters)
            return
        for letters in _prefix_range(self._rows_by_level.get(level, []), prefix.letters):
            yield Word._make(self.k, letters)

    def members_at_level(self, level: int) -> Iterator[Word]:
        return self.members_with_prefix(Word.empty(self.k), level)

    def iter_members(self) -> Iterator[Word]:
        """All members in shortlex order."""
        for level in self.occupied_levels():
            yield from self.members_at_level(level)

    def to_explicit(self) -> "TreeSet":
        if self.representation == Representation.EXPLICIT:
            return self
        check_cap(len(self), "tree set members")
        return TreeSet.explicit(self.k, self.depth, self.iter_members())

    def intersection(self, other: "TreeSet") -> "TreeSet":
        if other.k != self.k:
            raise AlphabetMismatchError(self.k, other.k)
        depth = min(self.depth, other.depth)
        if (self.representation == Representation.LEVEL_LIFT
                and other.representation == Representation.LEVEL_LIFT):
            return TreeSet.level_mask(self.k, depth, (i for i in self.levels & other.levels if i < depth))
        small, big = (self, other) if len(self) <= len(other) else (other, self)
        return TreeSet.explicit(self.k, depth,
                                (w for w in small.iter_members() if len(w) < depth and big.contains(w)))


@dataclass(frozen=True)
class GridTreeSet:
    """A subset A of T_N × T_N in one of three representations.

    EXPLICIT lists the members, LEVEL_LIFT is the union of full level sets
    L_{i,j} over the cells of B, PREDICATE wraps a pure membership function.
    """

    k: int
    depth: int
    representation: Representation = Representation.EXPLICIT
    members: FrozenSet[PairWord] = frozenset()
    cells: FrozenSet[Cell] = frozenset()
    predicate: Optional[Callable[[PairWord], bool]] = field(default=None, compare=False)
    name: str = ""
    cost_bound: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"alphabet size must be positive, got {self.k}")
        if self.depth < 1:
            raise ValueError(f"depth must be positive, got {self.depth}")
        if self.representation == Representation.EXPLICIT:
            object.__setattr__(self, "members", frozenset(self.members))
            for g in self.members:
                if g.k != self.k:
                    raise AlphabetMismatchError(self.k, g.k)
                if max(g.level) >= self.depth:
                    raise ValueError(f"pair {g} has level {g.level} outside depth {self.depth}")
        elif self.representation == Representation.LEVEL_LIFT:
            object.__setattr__(self, "cells", frozenset(self.cells))
            for i, j in self.cells:
                if not (0 <= i < self.depth and 0 <= j < self.depth):
                    raise ValueError(f"cell {(i, j)} outside [0, {self.depth})^2")
        elif self.predicate is None or not self.name:
            raise ValueError("predicate sets need a membership function and a name")
        elif self.cost_bound < 1:
            raise ValueError("predicate sets must declare a positive membership cost bound")

    @classmethod
    def explicit(cls, k: AlphabetLike, depth: int, members: Iterable[PairWord]) -> "GridTreeSet":
        return cls(alphabet_size(k), depth, Representation.EXPLICIT, members=frozenset(members))

    @classmethod
    def from_predicate(cls, k: AlphabetLike, depth: int, predicate: Callable[[PairWord], bool],
                       name: str, cost_bound: int = 1) -> "GridTreeSet":
        return cls(alphabet_size(k), depth, Representation.PREDICATE,
                   predicate=predicate, name=name, cost_bound=cost_bound)

    @classmethod
    def full(cls, k: AlphabetLike, depth: int) -> "GridTreeSet":
        return level_lift(GridSet.full(depth), k)

    @cached_property
    def _rows_by_level(self) -> Dict[Cell, List[Tuple[Tuple[int, ...], Tuple[int, ...]]]]:
        rows: Dict[Cell, List[Tuple[Tuple[int, ...], Tuple[int, ...]]]] = {}
        for g in self.members:
            rows.setdefault(g.level, []).append((g.first.letters, g.second.letters))
        for level_rows in rows.values():
            level_rows.sort()
        return rows

    @cached_property
    def _slices(self) -> Dict[Tuple[int, ...], FrozenSet[Word]]:
        slices: Dict[Tuple[int, ...], set] = {}
        for g in self.members:
            slices.setdefault(g.second.letters, set()).add(g.first)
        return {y: frozenset(xs) for y, xs in slices.items()}

    @cached_property
    def _columns(self) -> Dict[Tuple[int, ...], FrozenSet[Word]]:
        columns: Dict[Tuple[int, ...], set] = {}
        for g in self.members:
            columns.setdefault(g.first.letters, set()).add(g.second)
        return {x: frozenset(ys) for x, ys in columns.items()}

    def __contains__(self, g: PairWord) -> bool:
        return self.contains(g)

    def __len__(self) -> int:
        return sum(self.count_at_level(i, j) for i in range(self.depth) for j in range(self.depth))

    def contains(self, g: PairWord) -> bool:
        if g.k != self.k:
            raise AlphabetMismatchError(self.k, g.k)
        if max(g.level) >= self.depth:
            return False
        if self.representation == Representation.LEVEL_LIFT:
            return g.level in self.cells
        if self.representation == Representation.PREDICATE:
            return bool(self.predicate(g))
        return g in self.members

    def count_at_level(self, i: int, j: int) -> int:
        if not (0 <= i < self.depth and 0 <= j < self.depth):
            return 0
        if self.representation == Representation.LEVEL_LIFT:
            return self.k ** (i + j) if (i, j) in self.cells else 0
        if self.representation == Representation.EXPLICIT:
            return len(self._rows_by_level.get((i, j), ()))
        check_cap(self.k ** (i + j) * self.cost_bound, "predicate evaluations")
        return sum(1 for _ in self.members_at_level(i, j))

    def occupied_levels(self) -> List[Cell]:
        if self.representation == Representation.LEVEL_LIFT:
            return sorted(self.cells)
        if self.representation == Representation.EXPLICIT:
            return sorted(self._rows_by_level)
        return [(i, j) for i in range(self.depth) for j in range(self.depth)
                if self.count_at_level(i, j) > 0]

    def members_with_prefix(self, prefix: PairWord, i: int, j: int) -> Iterator[PairWord]:
        """Members at level (i, j) descending from prefix, canonical order."""
        if not (0 <= i < self.depth and 0 <= j < self.depth):
            return
        p1, p2 = prefix.first.letters, prefix.second.letters
        if len(p1) > i or len(p2) > j:
            return
        k = self.k
        if self.representation == Representation.EXPLICIT:
            n2 = len(p2)
            for a, b in self._explicit_prefix_rows(i, j, p1):
                if b[:n2] == p2:
                    yield PairWord(Word._make(k, a), Word._make(k, b))
            return
        if self.representation == Representation.LEVEL_LIFT and (i, j) not in self.cells:
            return
        for a in _extensions(k, p1, i):
            first = Word._make(k, a)
            for b in _extensions(k, p2, j):
                g = PairWord(first, Word._make(k, b))
                if self.representation == Representation.LEVEL_LIFT or self.predicate(g):
                    yield g

    def _explicit_prefix_rows(self, i: int, j: int, p1: Tuple[int, ...]):
        rows = self._rows_by_level.get((i, j), [])
        start = bisect.bisect_left(rows, (p1,))
        n1 = len(p1)
        for row in itertools.islice(rows, start, None):
            if row[0][:n1] != p1:
                break
            yield row

    def members_at_level(self, i: int, j: int) -> Iterator[PairWord]:
        return self.members_with_prefix(PairWord.identity(self.k), i, j)

    def iter_members(self) -> Iterator[PairWord]:
        """All members in level-major canonical order."""
        for i, j in self.occupied_levels():
            yield from self.members_at_level(i, j)

    def to_explicit(self) -> "GridTreeSet":
        if self.representation == Representation.EXPLICIT:
            return self
        if self.representation == Representation.LEVEL_LIFT:
            check_cap(len(self), "grid set members")
        else:
            check_cap(ball_size(self.k, self.depth - 1) ** 2 * self.cost_bound, "predicate evaluations")
        return GridTreeSet.explicit(self.k, self.depth, self.iter_members())

    def restrict(self, depth: int) -> "GridTreeSet":
        """A ∩ (T_depth × T_depth) as a depth-`depth` set."""
        if depth < 1:
            raise ValueError(f"depth must be positive, got {depth}")
        if self.representation == Representation.LEVEL_LIFT:
            return level_lift(GridSet(depth, (c for c in self.cells if max(c) < depth)), self.k)
        if self.representation == Representation.PREDICATE:
            return GridTreeSet.from_predicate(self.k, depth, self.predicate, self.name, self.cost_bound)
        return GridTreeSet.explicit(self.k, depth, (g for g in self.members if max(g.level) < depth))

    def slice_words(self, j: int) -> Iterator[Word]:
        """Words y with |y| = j whose slice may be non-empty, lexicographic."""
        if self.representation == Representation.EXPLICIT:
            ys = sorted(y for y in self._slices if len(y) == j)
            return (Word._make(self.k, y) for y in ys)
        return iter_sphere(self.k, j)

    def slice_at(self, y: Word) -> TreeSet:
        return slice_at(self, y)


@dataclass(frozen=True)
class GridSet:
    """A finite subset B of [0, N)^2."""

    depth: int
    cells: FrozenSet[Cell] = frozenset()

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError(f"depth must be positive, got {self.depth}")
        cells = frozenset((int(i), int(j)) for i, j in self.cells)
        for i, j in cells:
            if not (0 <= i < self.depth and 0 <= j < self.depth):
                raise ValueError(f"cell {(i, j)} outside [0, {self.depth})^2")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def full(cls, depth: int) -> "GridSet":
        return cls(depth, frozenset(itertools.product(range(depth), repeat=2)))

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def density(self) -> Fraction:
        return Fraction(len(self.cells), self.depth ** 2)


def density_1d(S: TreeSet) -> Fraction:
    """d_N(S) = (1/N) Σ_{i<N} |S ∩ L_i| / k^i."""
    total = sum((Fraction(S.count_at_level(i), S.k ** i) for i in S.occupied_levels()), Fraction(0))
    return total / S.depth


def density_2d(A: GridTreeSet) -> Fraction:
    """d_N(A) = (1/N^2) Σ_{(x,y)∈A} k^{-|x|-|y|}, summed member by member."""
    N, k = A.depth, A.k
    if A.representation == Representation.EXPLICIT:
        top = 2 * (N - 1)
        # integer numerator over the common denominator k^(2N-2)
        numerator = sum(k ** (top - len(g.first) - len(g.second)) for g in A.members)
        return Fraction(numerator, k ** top * N * N)
    total = sum((Fraction(A.count_at_level(i, j), k ** (i + j)) for i, j in A.occupied_levels()),
                Fraction(0))
    return total / (N * N)


def slice_at(A: GridTreeSet, y: Word) -> TreeSet:
    """The horizontal slice A_y = {x : (x, y) ∈ A}."""
    if y.k != A.k:
        raise AlphabetMismatchError(A.k, y.k)
    if len(y) >= A.depth:
        raise PreconditionError(f"slice word {y} must be shorter than depth {A.depth}")
    if A.representation == Representation.LEVEL_LIFT:
        return TreeSet.level_mask(A.k, A.depth, (i for i, j in A.cells if j == len(y)))
    if A.representation == Representation.EXPLICIT:
        return TreeSet.explicit(A.k, A.depth, A._slices.get(y.letters, frozenset()))
    check_cap(ball_size(A.k, A.depth - 1) * A.cost_bound, "predicate evaluations")
    return TreeSet.explicit(A.k, A.depth,
                            (x for i in range(A.depth) for x in iter_sphere(A.k, i)
                             if A.predicate(PairWord(x, y))))


def column_at(A: GridTreeSet, x: Word) -> TreeSet:
    """The vertical slice {y : (x, y) ∈ A}."""
    if x.k != A.k:
        raise AlphabetMismatchError(A.k, x.k)
    if len(x) >= A.depth:
        raise PreconditionError(f"column word {x} must be shorter than depth {A.depth}")
    if A.representation == Representation.LEVEL_LIFT:
        return TreeSet.level_mask(A.k, A.depth, (j for i, j in A.cells if i == len(x)))
    if A.representation == Representation.EXPLICIT:
        return TreeSet.explicit(A.k, A.depth, A._columns.get(x.letters, frozenset()))
    check_cap(ball_size(A.k, A.depth - 1) * A.cost_bound, "predicate evaluations")
    return TreeSet.explicit(A.k, A.depth,
                            (y for j in range(A.depth) for y in iter_sphere(A.k, j)
                             if A.predicate(PairWord(x, y))))


def row_densities(A: GridTreeSet) -> List[Fraction]:
    """Row averages v_j = k^{-j} Σ_{|y|=j} d_N(A_y), j < N.

    By the Fubini identity their mean equals density_2d(A).
    """
    N, k = A.depth, A.k
    rows: List[Fraction] = []
    for j in range(N):
        if A.representation == Representation.LEVEL_LIFT:
            representative = Word._make(k, (0,) * j)
            rows.append(density_1d(slice_at(A, representative)))
        elif A.representation == Representation.EXPLICIT:
            total = sum((density_1d(slice_at(A, y)) for y in A.slice_words(j)), Fraction(0))
            rows.append(total / k ** j)
        else:
            check_cap(k ** j, "slice words")
            total = sum((density_1d(slice_at(A, y)) for y in iter_sphere(k, j)), Fraction(0))
            rows.append(total / k ** j)
    return rows


def level_lift(B: GridSet, k: AlphabetLike) -> GridTreeSet:
    """A_B: the union of the full level sets L_{i,j} over (i, j) ∈ B."""
    return GridTreeSet(alphabet_size(k), B.depth, Representation.LEVEL_LIFT, cells=B.cells)


def level_mask_1d(k: AlphabetLike, depth: int, levels: Iterable[int]) -> TreeSet:
    """The one-dimensional lift: all words whose length lies in levels."""
    return TreeSet.level_mask(k, depth, levels)


def occupied_grid(A: GridTreeSet) -> GridSet:
    return GridSet(A.depth, A.occupied_levels())


def _seed_to_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(int(seed) % (1 << 64)))


def random_grid_set(N: int, k: AlphabetLike, delta: Union[Fraction, float, int], seed: int) -> GridTreeSet:
    """EXPLICIT random set: every pair below depth N kept independently with probability δ."""
    size = alphabet_size(k)
    delta = Fraction(delta)
    if not 0 <= delta <= 1:
        raise PreconditionError(f"delta must lie in [0, 1], got {delta}")
    per_axis = ball_size(size, N - 1)
    check_cap(per_axis * per_axis, "grid elements")
    draws = _seed_to_rng(seed).random(per_axis * per_axis)
    threshold = float(delta)
    members = []
    index = 0
    for i in range(N):
        firsts = list(iter_sphere(size, i))
        for j in range(N):
            seconds = list(iter_sphere(size, j))
            for x in firsts:
                for y in seconds:
                    if draws[index] < threshold:
                        members.append(PairWord(x, y))
                    index += 1
    logger.debug(f"random grid set N={N} k={size} delta={delta} seed={seed}: {len(members)} members")
    return GridTreeSet.explicit(size, N, members)


def random_tree_set(N: int, k: AlphabetLike, delta: Union[Fraction, float, int], seed: int) -> TreeSet:
    """EXPLICIT random subset of T_N with inclusion probability δ."""
    size = alphabet_size(k)
    delta = Fraction(delta)
    if not 0 <= delta <= 1:
        raise PreconditionError(f"delta must lie in [0, 1], got {delta}")
    total = ball_size(size, N - 1)
    check_cap(total, "tree elements")
    draws = _seed_to_rng(seed).random(total)
    threshold = float(delta)
    words = (w for i in range(N) for w in iter_sphere(size, i))
    return TreeSet.explicit(size, N, (w for w, u in zip(words, draws) if u < threshold))


def density_sequence(A: Union[GridTreeSet, TreeSet], n_max: Optional[int] = None) -> List[Fraction]:
    """d_N of the truncations to depth N = 1..n_max (default: the set's depth)."""
    n_max = A.depth if n_max is None else min(n_max, A.depth)
    if isinstance(A, TreeSet):
        return [density_1d(_restrict_tree(A, n)) for n in range(1, n_max + 1)]
    return [density_2d(A.restrict(n)) for n in range(1, n_max + 1)]


def _restrict_tree(S: TreeSet, depth: int) -> TreeSet:
    if S.representation == Representation.LEVEL_LIFT:
        return TreeSet.level_mask(S.k, depth, (i for i in S.levels if i < depth))
    return TreeSet.explicit(S.k, depth, (w for w in S.members if len(w) < depth))


def translate(A: GridTreeSet, alpha: PairWord) -> GridTreeSet:
    """α·A = {α·γ : γ ∈ A}, deep enough to hold every translated member."""
    if alpha.k != A.k:
        raise AlphabetMismatchError(A.k, alpha.k)
    depth = A.depth + max(alpha.level)
    return GridTreeSet.explicit(A.k, depth, (left_multiply(alpha, g) for g in A.iter_members()))


def shift(A: GridTreeSet, alpha: PairWord) -> GridTreeSet:
    """{γ : α·γ ∈ A}; the labelled tree of A read from the offset α."""
    if alpha.k != A.k:
        raise AlphabetMismatchError(A.k, alpha.k)
    if A.representation == Representation.LEVEL_LIFT:
        i0, j0 = alpha.level
        cells = [(i - i0, j - j0) for i, j in A.cells if i >= i0 and j >= j0]
        return level_lift(GridSet(A.depth, cells), A.k)
    quotients = (is_descendent(g, alpha) for g in A.iter_members())
    return GridTreeSet.explicit(A.k, A.depth, (t for t in quotients if t is not None))
