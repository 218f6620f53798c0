"""Shared machinery for exact subset searches.

Sets are grown one vertex at a time in decreasing vertex order, so that
sets of equal size come out in colex order (numeric order of bitsets).
Alongside the set ``S`` we carry ``addable``: the vertices ``v`` outside
``S`` for which ``S + v`` is still in general position.  ``S`` is a maximal
general position set exactly when ``addable`` is empty.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator

from .distance import DistanceMatrix
from .graph import VertexSet, iter_bits


class CapHit(Exception):
    """Raised inside a search when a budget limit is reached."""

    def __init__(self, cap: str):
        super().__init__(cap)
        self.cap = cap


@dataclass
class Budget:
    """Optional limits for a search; ``None`` means unlimited."""

    max_subset_size: int | None = None
    time_budget_ms: float | None = None
    max_nodes: int | None = None

    def __post_init__(self):
        self._deadline = None
        self.nodes = 0

    def start(self) -> "Budget":
        self.nodes = 0
        if self.time_budget_ms is not None:
            self._deadline = time.monotonic() + self.time_budget_ms / 1000
        return self

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise CapHit(f"max_nodes={self.max_nodes}")
        if self._deadline is not None and self.nodes & 0x3FF == 0 and time.monotonic() > self._deadline:
            raise CapHit(f"time_budget_ms={self.time_budget_ms:g}")


UNLIMITED = Budget()


@dataclass
class SearchResult:
    """Outcome of an exact search.

    ``count`` is None when the search was cut off; ``lower`` then records
    the best bound proved before the cap was hit.
    """

    count: int | None
    witness: VertexSet | None
    cap: str | None = None
    lower: int | None = None

    @property
    def exact(self) -> bool:
        return self.cap is None

    @property
    def inconclusive(self) -> bool:
        return self.cap is not None


def forbidden_by(dm: DistanceMatrix, chosen: list[int], v: int) -> int:
    mask = 0
    for s in chosen:
        mask |= dm.collinear(s, v)
    return mask


def addable_after(dm: DistanceMatrix, mask: int) -> int:
    """Vertices that can join ``mask`` (assumed in general position)."""
    members = list(iter_bits(mask))
    blocked = mask
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            blocked |= dm.collinear(a, b)
    return ((1 << dm.n) - 1) & ~blocked


def walk_gp_sets(dm: DistanceMatrix, max_depth: int | None = None, min_depth: int = 0,
                 budget: Budget = UNLIMITED) -> Iterator[tuple[int, int]]:
    """Yield ``(set, addable)`` for every general position set.

    Sets of each size appear in colex order relative to each other.  With
    ``min_depth`` set, branches that cannot reach that size are pruned.
    """
    n = dm.n
    limit = n if max_depth is None else max_depth
    chosen: list[int] = []

    def rec(s: int, addable: int, cand: int) -> Iterator[tuple[int, int]]:
        budget.tick()
        yield s, addable
        depth = len(chosen)
        if depth == limit or depth + cand.bit_count() < min_depth:
            return
        for v in iter_bits(cand):
            vb = 1 << v
            forbid = forbidden_by(dm, chosen, v)
            nxt_add = addable & ~forbid & ~vb
            chosen.append(v)
            yield from rec(s | vb, nxt_add, nxt_add & (vb - 1))
            chosen.pop()

    # The first element chosen is the largest; later ones lie below it.
    full = (1 << n) - 1
    yield 0, full
    for top in range(n):
        tb = 1 << top
        chosen.append(top)
        add = full & ~tb
        yield from rec(tb, add, add & (tb - 1))
        chosen.pop()


def iter_maximal_gp_sets(dm: DistanceMatrix, budget: Budget = UNLIMITED) -> Iterator[int]:
    for s, addable in walk_gp_sets(dm, budget=budget):
        if s and not addable:
            yield s


def colex_combinations(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """k-subsets of ``range(n)`` in colex order."""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, n):
        for rest in colex_combinations(top, k - 1):
            yield rest + (top,)
