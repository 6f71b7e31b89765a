#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Finite-state Λ-Markov systems.

A system on states 0..m-1 has, for each letter λ, a transition map T_λ and a
probability function p_λ with Σ_λ p_λ(x) = 1. Its Markov operator is

    (Pf)(x) = Σ_λ p_λ(x) f(T_λ x)

All operator arithmetic is exact (Fraction). The module also provides the
recurrence functions φ_r for a commuting pair, root search for arithmetic
product trees inside a pair, and the labelled-tree system of a set A together
with exact and Monte Carlo evaluations of μ_N(E).
"""

import logging
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import (DimensionMismatchError, InvalidPairError, InvalidSystemError,
                     PreconditionError)
from .search import BudgetMeter, SearchBudget, SearchStatus, product_tree_at
from .semigroup import PairWord, Word, ball_size, check_cap, iter_sphere, level_offset
from .sets import GridTreeSet, Representation, shift
from .structures import ProductTreeWitness

logger = logging.getLogger(__name__)

Rational = Union[Fraction, int, str]
States = FrozenSet[int]

MC_CHUNK = 4096


def _as_fraction(value: Rational) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class FiniteMarkovSystem:
    """(M, T, p) on states 0..m-1 over letters 0..k-1."""

    k: int
    m: int
    transitions: Tuple[Tuple[int, ...], ...]
    probabilities: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.k < 1 or self.m < 1:
            raise InvalidSystemError(f"need k >= 1 and m >= 1, got k={self.k} m={self.m}")
        transitions = tuple(tuple(int(s) for s in row) for row in self.transitions)
        probabilities = tuple(tuple(_as_fraction(p) for p in row) for row in self.probabilities)
        if len(transitions) != self.k or len(probabilities) != self.k:
            raise InvalidSystemError(
                f"expected {self.k} transition and probability rows, "
                f"got {len(transitions)} and {len(probabilities)}")
        for letter, (row, prow) in enumerate(zip(transitions, probabilities)):
            if len(row) != self.m or len(prow) != self.m:
                raise InvalidSystemError(f"rows for letter {letter} must have {self.m} entries")
            for x, target in enumerate(row):
                if not 0 <= target < self.m:
                    raise InvalidSystemError(f"T{letter}({x}) = {target} is not a state")
            for x, p in enumerate(prow):
                if not 0 <= p <= 1:
                    raise InvalidSystemError(f"p{letter}({x}) = {p} lies outside [0, 1]")
        for x in range(self.m):
            total = sum(probabilities[letter][x] for letter in range(self.k))
            if total != 1:
                raise InvalidSystemError(f"probabilities at state {x} sum to {total}, not 1")
        object.__setattr__(self, "transitions", transitions)
        object.__setattr__(self, "probabilities", probabilities)

    @classmethod
    def with_constant_probabilities(cls, transitions: Sequence[Sequence[int]],
                                    probabilities: Optional[Sequence[Rational]] = None) -> "FiniteMarkovSystem":
        """p_λ(x) = probabilities[λ] everywhere; uniform 1/k when omitted."""
        k = len(transitions)
        if k == 0:
            raise InvalidSystemError("a system needs at least one letter")
        m = len(transitions[0])
        if probabilities is None:
            probabilities = [Fraction(1, k)] * k
        if len(probabilities) != k:
            raise InvalidSystemError(f"expected {k} probabilities, got {len(probabilities)}")
        rows = [(_as_fraction(p),) * m for p in probabilities]
        return cls(k, m, tuple(tuple(row) for row in transitions), tuple(rows))

    def T(self, letter: int, x: int) -> int:
        return self.transitions[letter][x]

    def p(self, letter: int, x: int) -> Fraction:
        return self.probabilities[letter][x]

    def image(self, letter: int) -> States:
        return frozenset(self.transitions[letter])

    def has_constant_probabilities(self) -> bool:
        return all(len(set(row)) == 1 for row in self.probabilities)

    def is_non_degenerate(self) -> bool:
        return all(any(p > 0 for p in row) for row in self.probabilities)

    def has_disjoint_images(self) -> bool:
        seen: set = set()
        for letter in range(self.k):
            image = self.image(letter)
            if seen & image:
                return False
            seen |= image
        return True

    def step(self, x: int) -> Iterable[Tuple[int, int]]:
        """(letter, target) for every positive-probability move from x."""
        for letter in range(self.k):
            if self.probabilities[letter][x] > 0:
                yield letter, self.transitions[letter][x]


@dataclass(frozen=True)
class StateFunction:
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(_as_fraction(v) for v in self.values))

    @classmethod
    def indicator(cls, m: int, states: Iterable[int]) -> "StateFunction":
        chosen = set(states)
        return cls(tuple(Fraction(1) if x in chosen else Fraction(0) for x in range(m)))

    @classmethod
    def constant(cls, m: int, value: Rational) -> "StateFunction":
        return cls((_as_fraction(value),) * m)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, x: int) -> Fraction:
        return self.values[x]

    def __mul__(self, other: "StateFunction") -> "StateFunction":
        if len(other) != len(self):
            raise DimensionMismatchError(f"cannot multiply functions on {len(self)} and {len(other)} states")
        return StateFunction(tuple(a * b for a, b in zip(self.values, other.values)))

    def sup_norm(self) -> Fraction:
        return max((abs(v) for v in self.values), default=Fraction(0))

    def support(self) -> States:
        return frozenset(x for x, v in enumerate(self.values) if v != 0)

    def integral(self, weights: Optional[Sequence[Rational]] = None) -> Fraction:
        """Σ w(x) f(x); the uniform probability on states by default."""
        if weights is None:
            return sum(self.values, Fraction(0)) / len(self.values)
        if len(weights) != len(self.values):
            raise DimensionMismatchError(f"{len(weights)} weights for {len(self.values)} states")
        return sum((_as_fraction(w) * v for w, v in zip(weights, self.values)), Fraction(0))


def markov_apply(sys: FiniteMarkovSystem, f: StateFunction) -> StateFunction:
    """(Pf)(x) = Σ_λ p_λ(x) f(T_λ x)."""
    if len(f) != sys.m:
        raise DimensionMismatchError(f"function on {len(f)} states, system has {sys.m}")
    return StateFunction(tuple(
        sum((sys.probabilities[letter][x] * f.values[sys.transitions[letter][x]]
             for letter in range(sys.k)), Fraction(0))
        for x in range(sys.m)))


def markov_apply_power(sys: FiniteMarkovSystem, f: StateFunction, t: int) -> StateFunction:
    if t < 0:
        raise PreconditionError(f"power must be non-negative, got {t}")
    for _ in range(t):
        f = markov_apply(sys, f)
    return f


def validate_endomorphic(sys: FiniteMarkovSystem, S: Sequence[int]) -> bool:
    """S(T_λ x) = x whenever p_λ(x) > 0."""
    if len(S) != sys.m:
        raise DimensionMismatchError(f"candidate map has {len(S)} entries, system has {sys.m} states")
    return all(S[target] == x for x in range(sys.m) for _, target in sys.step(x))


def _commutes(first: FiniteMarkovSystem, second: FiniteMarkovSystem) -> bool:
    return all(first.T(a, second.T(b, x)) == second.T(b, first.T(a, x))
               for a in range(first.k) for b in range(second.k) for x in range(first.m))


@dataclass(frozen=True)
class PairReport:
    commuting: bool
    non_degenerate: Tuple[bool, bool]
    disjoint_images: Tuple[bool, bool]
    constant_probabilities: Tuple[bool, bool]

    @property
    def all_hold(self) -> bool:
        return (self.commuting and all(self.non_degenerate) and all(self.disjoint_images)
                and all(self.constant_probabilities))

    def rows(self) -> List[Tuple[str, str]]:
        def show(flags) -> str:
            return " / ".join("yes" if flag else "no" for flag in flags)
        return [
            ("commuting", "yes" if self.commuting else "no"),
            ("non-degenerate", show(self.non_degenerate)),
            ("disjoint images", show(self.disjoint_images)),
            ("constant probabilities", show(self.constant_probabilities)),
        ]


@dataclass(frozen=True)
class CommutingPair:
    """Two Λ-Markov systems on one state set whose transition maps commute."""

    first: FiniteMarkovSystem
    second: FiniteMarkovSystem
    validate: bool = field(default=True, compare=False)

    def __post_init__(self):
        if self.first.m != self.second.m:
            raise InvalidPairError(f"state counts differ: {self.first.m} vs {self.second.m}")
        if self.first.k != self.second.k:
            raise InvalidPairError(f"alphabets differ: k={self.first.k} vs k={self.second.k}")
        if self.validate and not _commutes(self.first, self.second):
            raise InvalidPairError("transition maps of the two systems do not commute")

    @property
    def k(self) -> int:
        return self.first.k

    @property
    def m(self) -> int:
        return self.first.m


def validate_pair(pair: CommutingPair) -> PairReport:
    systems = (pair.first, pair.second)
    return PairReport(
        commuting=_commutes(pair.first, pair.second),
        non_degenerate=tuple(s.is_non_degenerate() for s in systems),
        disjoint_images=tuple(s.has_disjoint_images() for s in systems),
        constant_probabilities=tuple(s.has_constant_probabilities() for s in systems),
    )


def product_pair(left: FiniteMarkovSystem, right: FiniteMarkovSystem) -> CommutingPair:
    """The pair on U × V acting by T_λ(u, v) = (f_λ u, v) and T'_λ(u, v) = (u, g_λ v).

    State (u, v) is numbered u·|V| + v.
    """
    if left.k != right.k:
        raise InvalidPairError(f"alphabets differ: k={left.k} vs k={right.k}")
    k, a, b = left.k, left.m, right.m
    states = [(x, y) for x in range(a) for y in range(b)]
    first = FiniteMarkovSystem(
        k, a * b,
        tuple(tuple(left.T(lam, x) * b + y for x, y in states) for lam in range(k)),
        tuple(tuple(left.p(lam, x) for x, y in states) for lam in range(k)))
    second = FiniteMarkovSystem(
        k, a * b,
        tuple(tuple(x * b + right.T(lam, y) for x, y in states) for lam in range(k)),
        tuple(tuple(right.p(lam, y) for x, y in states) for lam in range(k)))
    return CommutingPair(first, second)


def _reach(sys: FiniteMarkovSystem, sources: Iterable[int], length: int) -> States:
    frontier = frozenset(sources)
    for _ in range(length):
        frontier = frozenset(target for x in frontier for _, target in sys.step(x))
        if not frontier:
            break
    return frontier


def reachable_endpoints(sys: FiniteMarkovSystem, x: int, length: int,
                        direction: Optional[int] = None) -> States:
    """End points of positive-probability paths of the given length from x.

    With a direction, the first step must use that letter. Length 0 gives {x}.
    """
    if not 0 <= x < sys.m:
        raise PreconditionError(f"state {x} out of range")
    if length < 0:
        raise PreconditionError(f"path length must be non-negative, got {length}")
    if length == 0:
        return frozenset({x})
    letters = range(sys.k) if direction is None else (direction,)
    first = [sys.T(letter, x) for letter in letters if sys.p(letter, x) > 0]
    return _reach(sys, first, length - 1)


def _check_tree_parameters(u: Sequence[int], v: Sequence[int], n: int, r: int, min_r: int) -> None:
    if len(u) != 2 or len(v) != 2 or min(u) <= 0 or min(v) <= 0:
        raise PreconditionError(f"increments must be positive pairs, got u={tuple(u)} v={tuple(v)}")
    if n < 1:
        raise PreconditionError(f"n must be at least 1, got {n}")
    if r < min_r:
        raise PreconditionError(f"order must be at least {min_r}, got {r}")


def compute_phi_r(pair: CommutingPair, A: Iterable[int], u: Sequence[int], v: Sequence[int],
                  n: int, r: int) -> StateFunction:
    """The recurrence function φ_r.

        φ_1 = 1_A Π_λ (P1 1_{B_λ}) (P2 1_{C_λ})
        φ_r = 1_A Π_λ P1(1_{B_λ} · P1^{u1 n - 1} P2^{u2 n} φ_{r-1})
                    · P2(1_{C_λ} · P1^{v1 n} P2^{v2 n - 1} φ_{r-1})

    with B_λ = T1_λ(M) and C_λ = T2_λ(M).
    """
    _check_tree_parameters(u, v, n, r, 1)
    report = validate_pair(pair)
    if not all(report.disjoint_images):
        raise InvalidPairError("φ_r needs both systems to have disjoint images")
    if not all(report.non_degenerate):
        raise InvalidPairError("φ_r needs both systems to be non-degenerate")
    if not all(report.constant_probabilities):
        logger.warning("transition probabilities are not constant; φ_r positivity need not certify roots")

    m, k = pair.m, pair.k
    P1, P2 = pair.first, pair.second
    indicator_A = StateFunction.indicator(m, A)
    B = [StateFunction.indicator(m, P1.image(lam)) for lam in range(k)]
    C = [StateFunction.indicator(m, P2.image(lam)) for lam in range(k)]

    phi = indicator_A
    for lam in range(k):
        phi = phi * markov_apply(P1, B[lam]) * markov_apply(P2, C[lam])
    for order in range(2, r + 1):
        x_tail = markov_apply_power(P1, markov_apply_power(P2, phi, u[1] * n), u[0] * n - 1)
        y_tail = markov_apply_power(P1, markov_apply_power(P2, phi, v[1] * n - 1), v[0] * n)
        nxt = indicator_A
        for lam in range(k):
            nxt = nxt * markov_apply(P1, B[lam] * x_tail) * markov_apply(P2, C[lam] * y_tail)
        phi = nxt
        logger.debug(f"φ_{order}: support {sorted(phi.support())}")
    return phi


def phi_integrals(pair: CommutingPair, A: Iterable[int], u: Sequence[int], v: Sequence[int],
                  n_range: Tuple[int, int], r: int,
                  weights: Optional[Sequence[Rational]] = None) -> List[Tuple[int, Fraction]]:
    """[(n, ∫ φ_r)] for n in n_range, uniform weights by default."""
    A = frozenset(A)
    lo, hi = n_range
    if lo < 1 or hi < lo:
        raise PreconditionError(f"n range must satisfy 1 <= lo <= hi, got {lo}..{hi}")
    return [(n, compute_phi_r(pair, A, u, v, n, r).integral(weights)) for n in range(lo, hi + 1)]


def roots_by_search(pair: CommutingPair, A: Iterable[int], u: Sequence[int], v: Sequence[int],
                    n: int, r: int, budget: Optional[SearchBudget] = None) -> States:
    """States of A that root an order-r (nu, nv)-arithmetic product tree in A.

    For an X_λ child: a path of length n·u1 in the first system with initial
    direction λ, then a path of length n·u2 in the second. For a Y_λ child: a
    path of length n·v2 in the second system with initial direction λ, then a
    path of length n·v1 in the first. Roots of order t are computed from roots
    of order t-1, one table per depth.
    """
    _check_tree_parameters(u, v, n, r, 0)
    A = frozenset(A)
    if any(not 0 <= x < pair.m for x in A):
        raise PreconditionError("state set contains an out-of-range state")
    budget = budget or SearchBudget.from_settings()
    meter = BudgetMeter(budget.node_cap)
    P1, P2 = pair.first, pair.second

    x_reach: Dict[Tuple[int, int], States] = {}
    y_reach: Dict[Tuple[int, int], States] = {}
    for x in A:
        for lam in range(pair.k):
            meter.tick()
            x_reach[x, lam] = _reach(P2, reachable_endpoints(P1, x, n * u[0], lam), n * u[1])
            y_reach[x, lam] = _reach(P1, reachable_endpoints(P2, x, n * v[1], lam), n * v[0])

    roots = A
    for depth in range(1, r + 1):
        nxt = set()
        for x in roots:
            meter.tick()
            if all(x_reach[x, lam] & roots and y_reach[x, lam] & roots for lam in range(pair.k)):
                nxt.add(x)
        roots = frozenset(nxt)
        logger.debug(f"roots of order {depth}: {len(roots)} states")
        if not roots:
            break
    return roots


class LabelledTreeFrame:
    """The labelled tree τ = π_A W_α with its last X and Y letters.

    τ(w1, w2) = 1 exactly when (α1 w1, α2 w2) ∈ A. The X action appends to α1
    and records the final letter; the Y action does the same on the second
    coordinate. Offsets longer than the horizon are rejected.
    """

    def __init__(self, base: GridTreeSet, offset: Optional[PairWord] = None,
                 labels: Tuple[int, int] = (0, 0), horizon: Optional[int] = None):
        self.base = base
        self.offset = offset if offset is not None else PairWord.identity(base.k)
        self.labels = labels
        self.horizon = horizon if horizon is not None else 2 * base.depth
        if max(self.offset.level) > self.horizon:
            raise PreconditionError(f"offset {self.offset} exceeds the horizon {self.horizon}")

    def __repr__(self) -> str:
        return f"LabelledTreeFrame(offset={self.offset}, labels={self.labels})"

    def act_x(self, w: Word) -> "LabelledTreeFrame":
        if not w.letters:
            return self
        offset = PairWord(self.offset.first + w, self.offset.second)
        return LabelledTreeFrame(self.base, offset, (w.last_letter, self.labels[1]), self.horizon)

    def act_y(self, w: Word) -> "LabelledTreeFrame":
        if not w.letters:
            return self
        offset = PairWord(self.offset.first, self.offset.second + w)
        return LabelledTreeFrame(self.base, offset, (self.labels[0], w.last_letter), self.horizon)

    def label(self, w1: Word, w2: Word) -> bool:
        return self.base.contains(PairWord(self.offset.first + w1, self.offset.second + w2))

    @property
    def in_event(self) -> bool:
        """τ(∅, ∅) = 1."""
        return self.base.contains(self.offset)

    def orbit_key(self) -> Tuple:
        shifted = shift(self.base, self.offset)
        content = shifted.cells if shifted.representation == Representation.LEVEL_LIFT else shifted.members
        return (content, self.labels)


@dataclass
class LabelledTreePair:
    """The labelled-tree pair of a set A on its finite orbit.

    frames[s] is a representative frame of state s; event holds the states
    whose root label is 1.
    """

    pair: CommutingPair
    frames: List[LabelledTreeFrame]
    event: States

    @property
    def m(self) -> int:
        return self.pair.m


def labelled_tree_pair(A: GridTreeSet) -> LabelledTreePair:
    """Breadth-first closure of (π_A, 0, 0) under X_λ and Y_λ with p = 1/k.

    States are identified by the shifted set and the two labels, so two
    offsets with identical futures share a state.
    """
    if A.representation == Representation.PREDICATE:
        A = A.to_explicit()
    k = A.k
    root = LabelledTreeFrame(A)
    index: Dict[Tuple, int] = {root.orbit_key(): 0}
    frames = [root]
    moves: List[List[int]] = []
    queue = deque([0])
    while queue:
        s = queue.popleft()
        frame = frames[s]
        row = []
        for axis in (0, 1):
            for lam in range(k):
                step = Word._make(k, (lam,))
                nxt = frame.act_x(step) if axis == 0 else frame.act_y(step)
                key = nxt.orbit_key()
                if key not in index:
                    index[key] = len(frames)
                    frames.append(nxt)
                    queue.append(index[key])
                row.append(index[key])
        moves.append(row)
    m = len(frames)
    check_cap(m, "labelled-tree states")
    first = tuple(tuple(moves[s][lam] for s in range(m)) for lam in range(k))
    second = tuple(tuple(moves[s][k + lam] for s in range(m)) for lam in range(k))
    uniform = tuple((Fraction(1, k),) * m for _ in range(k))
    pair = CommutingPair(FiniteMarkovSystem(k, m, first, uniform),
                         FiniteMarkovSystem(k, m, second, uniform))
    event = frozenset(s for s, frame in enumerate(frames) if frame.in_event)
    logger.debug(f"labelled-tree pair: {m} states, {len(event)} in the event")
    return LabelledTreePair(pair, frames, event)


def event_states(system: LabelledTreePair) -> States:
    return system.event


@dataclass(frozen=True)
class MarkovRoot:
    """An event state of the labelled-tree pair that roots a product tree."""

    state: int
    offset: PairWord
    witness: Optional[ProductTreeWitness]


def find_markov_roots(A: GridTreeSet, r: int, u: Sequence[int], v: Sequence[int], n: int,
                      budget: Optional[SearchBudget] = None,
                      system: Optional[LabelledTreePair] = None) -> List[MarkovRoot]:
    """Roots in E of the labelled-tree pair of A, each with the product tree it gives in A.

    A root state s with representative offset α certifies an order-r
    (nu, nv)-arithmetic product tree in A rooted at α; the witness is the
    canonical one found by product_tree_at.
    """
    system = system or labelled_tree_pair(A)
    budget = budget or SearchBudget.from_settings()
    roots = roots_by_search(system.pair, system.event, u, v, n, r, budget)
    found = []
    for state in sorted(roots):
        offset = system.frames[state].offset
        outcome = product_tree_at(A, offset, r, u, v, n, budget=budget)
        if not outcome.found:
            level = logging.WARNING if outcome.status == SearchStatus.EXHAUSTED else logging.INFO
            logger.log(level, f"root state {state} at {offset}: product tree search {outcome.status.value}")
        found.append(MarkovRoot(state, offset, outcome.witness if outcome.found else None))
    return found


def mu_N_exact(A: GridTreeSet, N: Optional[int] = None) -> Fraction:
    """μ_N(E) = (1/N²) Σ_{i,j<N} k^{-(i+j)} #{(w1, w2) ∈ Λ^i × Λ^j : π_A X_{w1} Y_{w2} ∈ E}."""
    N = A.depth if N is None else N
    if N < 1:
        raise PreconditionError(f"N must be positive, got {N}")
    k = A.k
    per_axis = ball_size(k, N - 1)
    check_cap(per_axis * per_axis, "labelled-tree frames")
    root = LabelledTreeFrame(A, horizon=2 * N)
    total = Fraction(0)
    for i in range(N):
        for w1 in iter_sphere(k, i):
            row = root.act_x(w1)
            for j in range(N):
                hits = sum(1 for w2 in iter_sphere(k, j) if row.act_y(w2).in_event)
                if hits:
                    total += Fraction(hits, k ** (i + j))
    return total / (N * N)


@dataclass(frozen=True)
class MonteCarloEstimate:
    estimate: Fraction
    stderr: float
    hits: int
    samples: int

    def __iter__(self):
        return iter((self.estimate, self.stderr))


def _event_table(A: GridTreeSet, N: int) -> np.ndarray:
    """table[key(w1), key(w2)] = π_A X_{w1} Y_{w2} ∈ E, for all words shorter than N.

    Each cell is read off the labelled tree reached from π_A by frame actions.
    """
    k = A.k
    size = ball_size(k, N - 1)
    check_cap(size * size, "event table cells")
    table = np.zeros((size, size), dtype=bool)
    root = LabelledTreeFrame(A, horizon=2 * N)
    seconds = [w for j in range(N) for w in iter_sphere(k, j)]
    for i in range(N):
        for w1 in iter_sphere(k, i):
            row = root.act_x(w1)
            for w2 in seconds:
                if row.act_y(w2).in_event:
                    table[w1.key, w2.key] = True
    return table


def _walk_keys(rng: np.random.Generator, k: int, N: int, count: int) -> np.ndarray:
    """Packed shortlex keys of count uniform words: a length uniform on [0, N), then uniform letters."""
    lengths = rng.integers(0, N, size=count)
    letters = rng.integers(0, k, size=(count, max(N - 1, 1)))
    value = np.zeros(count, dtype=np.int64)
    for t in range(N - 1):
        value = np.where(t < lengths, value * k + letters[:, t], value)
    offsets = np.array([level_offset(k, i) for i in range(N)], dtype=np.int64)
    return offsets[lengths] + value


def mu_N_monte_carlo(A: GridTreeSet, N: Optional[int] = None, samples: int = 100_000,
                     seed: int = 0) -> MonteCarloEstimate:
    """Sample (i, j) uniformly, then uniform walks X_{w1} Y_{w2} of those lengths from π_A.

    Whether a walk ends in E is looked up in a table of frame-action results.

    Chunk c draws from Philox keyed by (seed, c), so the estimate depends only
    on the seed and the sample count.
    """
    N = A.depth if N is None else N
    if samples < 1:
        raise PreconditionError(f"samples must be at least 1, got {samples}")
    table = _event_table(A, N)
    hits = 0
    for chunk, start in enumerate(range(0, samples, MC_CHUNK)):
        count = min(MC_CHUNK, samples - start)
        rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([int(seed) % (1 << 64), chunk])))
        x_keys = _walk_keys(rng, A.k, N, count)
        y_keys = _walk_keys(rng, A.k, N, count)
        hits += int(table[x_keys, y_keys].sum())
    p = hits / samples
    stderr = math.sqrt(p * (1 - p) / samples)
    return MonteCarloEstimate(Fraction(hits, samples), stderr, hits, samples)
