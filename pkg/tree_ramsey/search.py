#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Deterministic backtracking searches for the witnesses of `structures`, the
two-dimensional grid progression oracle, and the constructive tree-array
pipeline (dense rows, dense slice, regular embedding, grid progression,
assembly).

Every search returns a SearchOutcome that separates "found", "exhausted" (the
whole space was searched) and "budget exhausted". Top-level branches (gaps,
level schedules, scale factors n) each get their own node budget and are
reduced in branch order, so the answer does not depend on the worker count.
"""

import itertools
import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import (Callable, Dict, Generic, Iterable, List, Optional, Sequence, Tuple,
                    TypeVar, Union)

from .config import Settings, get_settings
from .errors import BudgetExhaustedError, PreconditionError
from .semigroup import (X_AXIS, FreeWord, PairWord, Word, enumerate_ball, generators,
                        iter_sphere)
from .sets import (GridSet, GridTreeSet, TreeSet, column_at, density_1d, density_2d,
                   row_densities, shift, slice_at)
from .structures import (CartesianProductWitness, ProductTreeWitness, RegularEmbeddingWitness,
                         TreeArrayWitness, TreeWitness, translate_product_witness,
                         verify_tree_array)

logger = logging.getLogger(__name__)

T = TypeVar("T")
B = TypeVar("B")

Increment = Tuple[int, int]
Interval = Tuple[int, int]

STAGE_DENSE_ROWS = "dense-rows"
STAGE_DENSE_SLICE = "dense-slice"
STAGE_REGULAR_EMBEDDING = "regular-embedding"
STAGE_AP_GRID = "ap-grid"
STAGE_ASSEMBLE = "assemble"


class SearchStatus(str, Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class SearchBudget:
    """Per-branch node cap, overall wall-clock cap and worker hint."""

    node_cap: Optional[int] = 2_000_000
    time_cap: Optional[float] = None
    workers: int = 1
    deterministic: bool = True

    def __post_init__(self):
        if self.node_cap is not None and self.node_cap < 1:
            raise ValueError(f"node cap must be positive, got {self.node_cap}")
        if self.time_cap is not None and self.time_cap <= 0:
            raise ValueError(f"time cap must be positive, got {self.time_cap}")
        if self.workers < 1:
            raise ValueError(f"worker count must be positive, got {self.workers}")

    @classmethod
    def from_settings(cls, settings: Optional[Settings] = None, **overrides) -> "SearchBudget":
        settings = settings or get_settings()
        values = dict(node_cap=settings.node_budget, time_cap=settings.time_budget,
                      workers=settings.workers)
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    @classmethod
    def unlimited(cls, workers: int = 1) -> "SearchBudget":
        return cls(node_cap=None, time_cap=None, workers=workers)


class _Cancelled(Exception):
    pass


class BudgetMeter:
    """Counts search nodes against a node cap and a shared deadline."""

    CLOCK_STRIDE = 256

    def __init__(self, node_cap: Optional[int] = None, deadline: Optional[float] = None,
                 cancel: Optional[threading.Event] = None):
        self.node_cap = node_cap
        self.deadline = deadline
        self.cancel = cancel
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.node_cap is not None and self.nodes > self.node_cap:
            raise BudgetExhaustedError(self.nodes)
        if self.nodes % self.CLOCK_STRIDE == 0:
            if self.cancel is not None and self.cancel.is_set():
                raise _Cancelled()
            if self.deadline is not None and time.monotonic() > self.deadline:
                raise BudgetExhaustedError(self.nodes, "time cap")


@dataclass
class SearchOutcome(Generic[T]):
    status: SearchStatus
    witness: Optional[T] = None
    nodes: int = 0
    stage: Optional[str] = None
    detail: str = ""
    n: Optional[int] = None
    elapsed: float = 0.0

    @property
    def found(self) -> bool:
        return self.status == SearchStatus.FOUND

    def __bool__(self) -> bool:
        return self.found


@dataclass
class _BranchResult(Generic[T]):
    value: Optional[T]
    nodes: int
    stopped_by: Optional[str] = None


def _attempt(solve: Callable[[B, BudgetMeter], Optional[T]], branch: B, budget: SearchBudget,
             deadline: Optional[float], cancel: Optional[threading.Event]) -> _BranchResult:
    meter = BudgetMeter(budget.node_cap, deadline, cancel)
    try:
        value = solve(branch, meter)
    except BudgetExhaustedError as e:
        return _BranchResult(None, meter.nodes, e.reason)
    except _Cancelled:
        return _BranchResult(None, meter.nodes, "cancelled")
    return _BranchResult(value, meter.nodes)


def run_branches(branches: Iterable[B], solve: Callable[[B, BudgetMeter], Optional[T]],
                 budget: SearchBudget) -> Tuple[SearchOutcome, Optional[B]]:
    """Run solve on each branch and reduce to the first success in branch order.

    A branch that runs out of budget before any earlier success makes the whole
    search BUDGET_EXHAUSTED. With deterministic=False and several workers the
    first success to complete wins.
    """
    started = time.monotonic()
    deadline = started + budget.time_cap if budget.time_cap else None
    nodes = 0

    def finish(status: SearchStatus, branch=None, value=None, detail: str = ""):
        outcome = SearchOutcome(status, value, nodes, detail=detail,
                                elapsed=time.monotonic() - started)
        return outcome, branch

    if budget.workers <= 1:
        for branch in branches:
            result = _attempt(solve, branch, budget, deadline, None)
            nodes += result.nodes
            logger.debug(f"branch {branch!r}: {result.nodes} nodes")
            if result.stopped_by:
                return finish(SearchStatus.BUDGET_EXHAUSTED, branch,
                              detail=f"{result.stopped_by} hit in branch {branch!r}")
            if result.value is not None:
                return finish(SearchStatus.FOUND, branch, result.value)
        return finish(SearchStatus.EXHAUSTED)

    cancel = threading.Event()
    window = 2 * budget.workers
    pending_branches = iter(branches)
    with ThreadPoolExecutor(max_workers=budget.workers) as pool:
        while True:
            batch = list(itertools.islice(pending_branches, window))
            if not batch:
                return finish(SearchStatus.EXHAUSTED)
            futures = {pool.submit(_attempt, solve, b, budget, deadline, cancel): b for b in batch}
            if budget.deterministic:
                for future, branch in futures.items():
                    result = future.result()
                    nodes += result.nodes
                    if result.stopped_by:
                        cancel.set()
                        return finish(SearchStatus.BUDGET_EXHAUSTED, branch,
                                      detail=f"{result.stopped_by} hit in branch {branch!r}")
                    if result.value is not None:
                        cancel.set()
                        return finish(SearchStatus.FOUND, branch, result.value)
            else:
                stopped = None
                for future in as_completed(futures):
                    result = future.result()
                    nodes += result.nodes
                    if result.value is not None:
                        cancel.set()
                        return finish(SearchStatus.FOUND, futures[future], result.value)
                    if result.stopped_by and stopped is None:
                        stopped = (futures[future], result.stopped_by)
                if stopped is not None:
                    return finish(SearchStatus.BUDGET_EXHAUSTED, stopped[0],
                                  detail=f"{stopped[1]} hit in branch {stopped[0]!r}")


class _ScheduleEmbedder:
    """Embed B_d into S so that tree level i lands on schedule[i].

    children() is a memoized feasibility table keyed by (image, schedule index):
    an image is kept only if every letter has a feasible continuation at the
    next scheduled level. The first feasible continuation per letter is
    recorded, which makes the assembled map the lexicographically first one.
    """

    def __init__(self, S: TreeSet, schedule: Sequence[int], meter: BudgetMeter):
        self.S = S
        self.schedule = list(schedule)
        self.meter = meter
        self._memo: Dict[Tuple[Tuple[int, ...], int], Optional[Tuple[Word, ...]]] = {}

    def children(self, x: Word, i: int) -> Optional[Tuple[Word, ...]]:
        key = (x.letters, i)
        if key in self._memo:
            return self._memo[key]
        result: Optional[Tuple[Word, ...]] = ()
        if i + 1 < len(self.schedule):
            chosen = []
            for letter in range(self.S.k):
                child = self._first_feasible(x.child(letter), i + 1)
                if child is None:
                    result = None
                    break
                chosen.append(child)
            else:
                result = tuple(chosen)
        self._memo[key] = result
        return result

    def _first_feasible(self, prefix: Word, i: int) -> Optional[Word]:
        for candidate in self.S.members_with_prefix(prefix, self.schedule[i]):
            self.meter.tick()
            if self.children(candidate, i) is not None:
                return candidate
        return None

    def embed(self) -> Optional[Dict[Word, Word]]:
        for root in self.S.members_at_level(self.schedule[0]):
            self.meter.tick()
            if self.children(root, 0) is not None:
                return self._assemble(root)
        return None

    def _assemble(self, root: Word) -> Dict[Word, Word]:
        mapping: Dict[Word, Word] = {}
        stack = [(Word.empty(self.S.k), root, 0)]
        while stack:
            address, image, i = stack.pop()
            mapping[address] = image
            for letter, child in enumerate(self._memo[(image.letters, i)]):
                stack.append((address.child(letter), child, i + 1))
        return mapping


def _gap_range(q_range: Optional[Interval], depth: int, r: int) -> range:
    if q_range is None:
        hi = max(1, (depth - 1) // r) if r > 0 else 1
        return range(1, hi + 1)
    lo, hi = q_range
    if lo < 1 or hi < lo:
        raise PreconditionError(f"gap range must satisfy 1 <= lo <= hi, got {lo}..{hi}")
    return range(lo, hi + 1)


def _gap_schedules(occupied: Iterable[int], depth: int, r: int, q: int) -> List[List[int]]:
    """Level schedules L, L+q, ..., L+rq lying inside the occupied levels."""
    occupied = set(occupied)
    schedules = []
    for level in range(depth - r * q):
        schedule = [level + i * q for i in range(r + 1)]
        if all(s in occupied for s in schedule):
            schedules.append(schedule)
    return schedules


def find_arithmetic_subtree(S: TreeSet, r: int, q_range: Optional[Interval] = None,
                            budget: Optional[SearchBudget] = None) -> SearchOutcome[TreeWitness]:
    """First arithmetic subtree of order r, by gap then by images in address order."""
    if r < 0:
        raise PreconditionError(f"order must be non-negative, got {r}")
    budget = budget or SearchBudget.from_settings()
    gaps = _gap_range(q_range, S.depth, r)
    if r == 0:
        gaps = gaps[:1]
    occupied = S.occupied_levels()

    def solve(q: int, meter: BudgetMeter) -> Optional[TreeWitness]:
        for schedule in _gap_schedules(occupied, S.depth, r, q):
            mapping = _ScheduleEmbedder(S, schedule, meter).embed()
            if mapping is not None:
                return TreeWitness(S.k, r, q, mapping)
        return None

    outcome, _ = run_branches(gaps, solve, budget)
    logger.debug(f"arithmetic subtree r={r}: {outcome.status.value} after {outcome.nodes} nodes")
    return outcome


def find_regular_embedding(S: TreeSet, d: int,
                           budget: Optional[SearchBudget] = None) -> SearchOutcome[RegularEmbeddingWitness]:
    """First regular embedding of B_d: level schedules lexicographic, then images."""
    if d < 0:
        raise PreconditionError(f"depth must be non-negative, got {d}")
    budget = budget or SearchBudget.from_settings()
    schedules = itertools.combinations(S.occupied_levels(), d + 1)

    def solve(schedule: Tuple[int, ...], meter: BudgetMeter) -> Optional[RegularEmbeddingWitness]:
        mapping = _ScheduleEmbedder(S, schedule, meter).embed()
        return None if mapping is None else RegularEmbeddingWitness(S.k, d, mapping)

    outcome, _ = run_branches(schedules, solve, budget)
    return outcome


@dataclass(frozen=True)
class GridApWitness:
    """The r×r grid {(a1 + xq, a2 + yq) : 0 <= x, y < r}."""

    a1: int
    a2: int
    q: int
    r: int

    def cells(self) -> List[Tuple[int, int]]:
        return [(self.a1 + x * self.q, self.a2 + y * self.q)
                for x in range(self.r) for y in range(self.r)]


def find_ap_grid(B: GridSet, r: int) -> Optional[GridApWitness]:
    """First (by q, then a1, then a2) r×r grid progression inside B."""
    if r < 1:
        raise PreconditionError(f"grid side must be at least 1, got {r}")
    N = B.depth
    gaps = range(1, 2) if r == 1 else range(1, (N - 1) // (r - 1) + 1)
    for q in gaps:
        span = (r - 1) * q
        for a1 in range(N - span):
            for a2 in range(N - span):
                candidate = GridApWitness(a1, a2, q, r)
                if all(cell in B for cell in candidate.cells()):
                    return candidate
    return None


def select_dense_indices(values: Sequence[Union[Fraction, int]], delta: Union[Fraction, int]) -> List[int]:
    """J = {j : values_j >= δ/2}; requires the mean of values to be at least δ."""
    values = [Fraction(v) for v in values]
    delta = Fraction(delta)
    if not values:
        raise PreconditionError("no values to select from")
    if sum(values) < delta * len(values):
        mean = sum(values) / len(values)
        raise PreconditionError(f"mean {mean} is below delta {delta}")
    return [j for j, value in enumerate(values) if value >= delta / 2]


def _first_dense_slice(A: GridTreeSet, j: int, threshold: Fraction) -> Optional[Tuple[Word, TreeSet]]:
    for y in A.slice_words(j):
        S = slice_at(A, y)
        if density_1d(S) >= threshold:
            return y, S
    return None


def _schedule_selector(k: int, r: int, positions: Sequence[int]) -> Dict[Word, Word]:
    """σ: B_r → B_d with σ(∅) = 0^{p_0} and σ(uλ) = σ(u)·λ·0^{p_{i+1} - p_i - 1}, i = |u|."""
    sigma = {Word.empty(k): Word._make(k, (0,) * positions[0])}
    for u in enumerate_ball(k, r):
        if not u.letters:
            continue
        i = len(u) - 1
        padding = (0,) * (positions[i + 1] - positions[i] - 1)
        sigma[u] = Word._make(k, sigma[u.parent()].letters + (u.last_letter,) + padding)
    return sigma


def construct_tree_array(A: GridTreeSet, r: int, delta: Union[Fraction, int],
                         budget: Optional[SearchBudget] = None) -> SearchOutcome[TreeArrayWitness]:
    """Build a tree array of order r along the density-increment pipeline.

    Stages: dense rows of the Fubini decomposition, one dense slice per row,
    a deep regular embedding per slice, a grid progression in the occupied
    levels, and assembly. A stage failing at this depth is reported by name.
    """
    if r < 0:
        raise PreconditionError(f"order must be non-negative, got {r}")
    delta = Fraction(delta)
    if delta <= 0:
        raise PreconditionError(f"delta must be positive, got {delta}")
    budget = budget or SearchBudget.from_settings()
    started = time.monotonic()
    nodes = 0

    def stop(status: SearchStatus, stage: str, detail: str, witness=None) -> SearchOutcome:
        logger.info(f"tree array: stage {stage} -> {status.value}: {detail}")
        return SearchOutcome(status, witness, nodes, stage, detail,
                             elapsed=time.monotonic() - started)

    density = density_2d(A)
    if density < delta:
        raise PreconditionError(f"density {density} is below delta {delta}")

    logger.info(f"tree array: stage {STAGE_DENSE_ROWS}")
    J = select_dense_indices(row_densities(A), delta)
    logger.debug(f"dense rows: {J}")

    logger.info(f"tree array: stage {STAGE_DENSE_SLICE}")
    slices: Dict[int, Tuple[Word, TreeSet]] = {}
    for j in J:
        found = _first_dense_slice(A, j, delta / 2)
        if found is not None:
            slices[j] = found
    if not slices:
        return stop(SearchStatus.EXHAUSTED, STAGE_DENSE_SLICE, "no row has a slice of density delta/2")

    logger.info(f"tree array: stage {STAGE_REGULAR_EMBEDDING}")
    embeddings: Dict[int, RegularEmbeddingWitness] = {}
    for j, (y, S) in slices.items():
        for d in range(len(S.occupied_levels()) - 1, r - 1, -1):
            outcome = find_regular_embedding(S, d, budget)
            nodes += outcome.nodes
            if outcome.status == SearchStatus.BUDGET_EXHAUSTED:
                return stop(SearchStatus.BUDGET_EXHAUSTED, STAGE_REGULAR_EMBEDDING,
                            f"row {j}, depth {d}: {outcome.detail}")
            if outcome.found:
                embeddings[j] = outcome.witness
                logger.debug(f"row {j}: regular embedding of depth {d}, schedule {outcome.witness.schedule}")
                break
    if not embeddings:
        return stop(SearchStatus.EXHAUSTED, STAGE_REGULAR_EMBEDDING,
                    f"no dense slice holds a regular embedding of depth {r}")

    logger.info(f"tree array: stage {STAGE_AP_GRID}")
    grid = GridSet(A.depth, ((n, j) for j, emb in embeddings.items() for n in emb.schedule))
    ap = find_ap_grid(grid, r + 1)
    if ap is None:
        return stop(SearchStatus.EXHAUSTED, STAGE_AP_GRID,
                    f"no {r + 1}x{r + 1} grid progression among {len(grid)} occupied levels")

    logger.info(f"tree array: stage {STAGE_ASSEMBLE}")
    rows, maps = [], []
    for step in range(r + 1):
        j = ap.a2 + step * ap.q
        embedding = embeddings[j]
        schedule = embedding.schedule
        positions = [schedule.index(ap.a1 + i * ap.q) for i in range(r + 1)]
        sigma = _schedule_selector(A.k, r, positions)
        maps.append({u: embedding.mapping[s] for u, s in sigma.items()})
        rows.append(slices[j][0])
    witness = TreeArrayWitness(A.k, r, ap.q, ap.a1, ap.a2, tuple(rows), tuple(maps))
    verdict = verify_tree_array(witness, A)
    if not verdict:
        return stop(SearchStatus.EXHAUSTED, STAGE_ASSEMBLE, f"assembled array fails: {verdict}")
    return stop(SearchStatus.FOUND, STAGE_ASSEMBLE, f"q={ap.q} c1={ap.a1} c2={ap.a2}", witness)


def _check_increments(u: Sequence[int], v: Sequence[int], relaxed: bool) -> Tuple[Increment, Increment]:
    checked = []
    for name, inc in (("u", u), ("v", v)):
        if len(inc) != 2:
            raise PreconditionError(f"increment {name} must have two coordinates, got {inc!r}")
        inc = (int(inc[0]), int(inc[1]))
        if relaxed:
            if min(inc) < 0 or max(inc) == 0:
                raise PreconditionError(
                    f"relaxed increment {name} needs non-negative coordinates, one positive; got {inc}")
        elif min(inc) <= 0:
            raise PreconditionError(f"increment {name} must be positive in both coordinates, got {inc}"
                                    " (use relaxed mode for zero coordinates)")
        checked.append(inc)
    return checked[0], checked[1]


class _ProductEmbedder:
    """Memoized feasibility table for (U, V)-arithmetic product trees in A."""

    def __init__(self, A: GridTreeSet, U: Increment, V: Increment, meter: BudgetMeter):
        self.A = A
        self.U = U
        self.V = V
        self.meter = meter
        self.gens = generators(A.k)
        self._memo: Dict[Tuple[Tuple[int, ...], Tuple[int, ...], int], Optional[Tuple[PairWord, ...]]] = {}

    def children(self, g: PairWord, remaining: int) -> Optional[Tuple[PairWord, ...]]:
        key = (g.first.letters, g.second.letters, remaining)
        if key in self._memo:
            return self._memo[key]
        result: Optional[Tuple[PairWord, ...]] = ()
        if remaining > 0:
            chosen = []
            for axis, letter in self.gens:
                child = self._first_feasible(g, axis, letter, remaining - 1)
                if child is None:
                    result = None
                    break
                chosen.append(child)
            else:
                result = tuple(chosen)
        self._memo[key] = result
        return result

    def _first_feasible(self, g: PairWord, axis: int, letter: int, remaining: int) -> Optional[PairWord]:
        i, j = g.level
        if axis == X_AXIS:
            prefix = PairWord(g.first.child(letter), g.second)
            level = (i + self.U[0], j + self.U[1])
        else:
            prefix = PairWord(g.first, g.second.child(letter))
            level = (i + self.V[0], j + self.V[1])
        for candidate in self.A.members_with_prefix(prefix, *level):
            self.meter.tick()
            if self.children(candidate, remaining) is not None:
                return candidate
        return None

    def embed(self, roots: Iterable[PairWord], r: int) -> Optional[Dict[FreeWord, PairWord]]:
        for root in roots:
            self.meter.tick()
            if self.children(root, r) is not None:
                return self._assemble(root, r)
        return None

    def _assemble(self, root: PairWord, r: int) -> Dict[FreeWord, PairWord]:
        mapping: Dict[FreeWord, PairWord] = {}
        stack = [(FreeWord.empty(self.A.k), root, r)]
        while stack:
            address, image, remaining = stack.pop()
            mapping[address] = image
            for (axis, letter), child in zip(self.gens, self._memo[(image.first.letters,
                                                                     image.second.letters, remaining)]):
                stack.append((address.append(axis, letter), child, remaining - 1))
        return mapping


def _product_roots(A: GridTreeSet, r: int, U: Increment, V: Increment):
    """Members of A whose level leaves every level of the pattern occupied."""
    occupied = set(A.occupied_levels())
    for i, j in A.occupied_levels():
        pattern = ((i + x * U[0] + y * V[0], j + x * U[1] + y * V[1])
                   for x in range(r + 1) for y in range(r + 1 - x))
        if all(cell in occupied for cell in pattern):
            yield from A.members_at_level(i, j)


def find_product_tree(A: GridTreeSet, r: int, u: Sequence[int], v: Sequence[int], n_range: Interval,
                      relaxed: bool = False, root: Optional[PairWord] = None,
                      budget: Optional[SearchBudget] = None) -> SearchOutcome[ProductTreeWitness]:
    """Smallest n in n_range admitting an (nu, nv)-arithmetic product tree of order r.

    The returned witness carries the scaled increments nu and nv; the outcome
    records n. A fixed root restricts the search to trees rooted there.
    """
    if r < 0:
        raise PreconditionError(f"order must be non-negative, got {r}")
    u, v = _check_increments(u, v, relaxed)
    lo, hi = n_range
    if lo < 1 or hi < lo:
        raise PreconditionError(f"n range must satisfy 1 <= lo <= hi, got {lo}..{hi}")
    budget = budget or SearchBudget.from_settings()

    def solve(n: int, meter: BudgetMeter) -> Optional[ProductTreeWitness]:
        U = (n * u[0], n * u[1])
        V = (n * v[0], n * v[1])
        if root is not None:
            roots = [root] if A.contains(root) else []
        else:
            roots = _product_roots(A, r, U, V)
        mapping = _ProductEmbedder(A, U, V, meter).embed(roots, r)
        return None if mapping is None else ProductTreeWitness(A.k, r, U, V, mapping)

    outcome, n = run_branches(range(lo, hi + 1), solve, budget)
    if outcome.found:
        outcome.n = n
    return outcome


def product_tree_at(A: GridTreeSet, alpha: PairWord, r: int, u: Sequence[int], v: Sequence[int],
                    n: int, relaxed: bool = False,
                    budget: Optional[SearchBudget] = None) -> SearchOutcome[ProductTreeWitness]:
    """Search the shifted set {γ : α·γ ∈ A} for a tree rooted at (∅, ∅) and translate it back by α."""
    shifted = shift(A, alpha)
    outcome = find_product_tree(shifted, r, u, v, (n, n), relaxed=relaxed,
                                root=PairWord.identity(A.k), budget=budget)
    if outcome.found:
        outcome.witness = translate_product_witness(outcome.witness, alpha)
    return outcome


def _cartesian_search(A: GridTreeSet, r: int, q: int, meter: BudgetMeter) -> Optional[CartesianProductWitness]:
    k, N = A.k, A.depth
    addresses = enumerate_ball(k, r)
    mapping: Dict[Word, Word] = {}

    def extend(index: int, common: Optional[TreeSet]) -> Optional[CartesianProductWitness]:
        if common is not None and not _gap_schedules(common.occupied_levels(), N, r, q):
            return None
        if index == len(addresses):
            for schedule in _gap_schedules(common.occupied_levels(), N, r, q):
                second = _ScheduleEmbedder(common, schedule, meter).embed()
                if second is not None:
                    return CartesianProductWitness(k, r, q, dict(mapping), second)
            return None
        address = addresses[index]
        if address.letters:
            parent_image = mapping[address.parent()]
            target = parent_image.child(address.last_letter)
            candidates = (Word._make(k, target.letters + tail)
                          for tail in itertools.product(range(k), repeat=q - 1))
        else:
            candidates = (x for level in range(N - r * q) for x in iter_sphere(k, level))
        for x in candidates:
            meter.tick()
            column = column_at(A, x)
            mapping[address] = x
            found = extend(index + 1, column if common is None else common.intersection(column))
            if found is not None:
                return found
        mapping.pop(address, None)
        return None

    return extend(0, None)


def find_cartesian_product(A: GridTreeSet, r: int, q_range: Optional[Interval] = None,
                           budget: Optional[SearchBudget] = None) -> SearchOutcome[CartesianProductWitness]:
    """Exploration mode: two arithmetic subtrees with one gap q whose product lies in A.

    Exhaustive over the first factor in canonical order; the second factor is
    searched in the intersection of the columns over the first factor's image.
    """
    if r < 0:
        raise PreconditionError(f"order must be non-negative, got {r}")
    budget = budget or SearchBudget.from_settings()
    gaps = _gap_range(q_range, A.depth, r)
    if r == 0:
        gaps = gaps[:1]
    outcome, _ = run_branches(gaps, lambda q, meter: _cartesian_search(A, r, q, meter), budget)
    return outcome
