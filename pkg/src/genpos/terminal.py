"""Terminal sets and the terminal position numbers tp, tp⁻."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .distance import DistanceMatrix
from .errors import ParameterError
from .graph import VertexSet, as_mask, iter_bits
from .position import CollinearWitness, _dm, find_collinear_triple
from .search import UNLIMITED, Budget, CapHit, addable_after, iter_maximal_gp_sets

INFINITE = math.inf


@dataclass(frozen=True)
class BadPathWitness:
    """A shortest path from ``u`` through ``y`` to ``x``, with ``x, y`` in S."""

    u: int
    y: int
    x: int

    def check(self, dm: DistanceMatrix) -> bool:
        u, y, x = self.u, self.y, self.x
        return len({u, x, y}) == 3 and dm.same_component(u, x) and dm.d(u, x) == dm.d(u, y) + dm.d(y, x)


@dataclass(frozen=True)
class TerminalFailure:
    """Why a set is not terminal.

    ``reason`` is ``"not-gp"`` (``witness`` is a CollinearWitness),
    ``"not-maximal"`` (``vertex`` can be added) or ``"not-terminal"``
    (``vertex`` is the endpoint of no bad path).
    """

    reason: str
    vertex: int | None = None
    witness: CollinearWitness | None = None


@dataclass
class TerminalNumbers:
    tp: float | int | None
    tp_minus: float | int | None
    tp_witness: VertexSet | None = None
    tp_minus_witness: VertexSet | None = None
    maximal_sets: int = 0
    terminal_sets: int = 0
    cap: str | None = None

    @property
    def exact(self) -> bool:
        return self.cap is None

    @property
    def has_terminal_set(self) -> bool:
        return self.tp_witness is not None


def bad_path(dm: DistanceMatrix, s, u: int) -> BadPathWitness | None:
    """A (u,S)-bad path, or None when ``u`` is not S-terminal."""
    mask = as_mask(s)
    if mask >> u & 1:
        raise ParameterError(f"vertex {u} is in the set")
    for y in iter_bits(mask):
        hit = dm.beyond(u, y) & mask
        if hit:
            return BadPathWitness(u, y, (hit & -hit).bit_length() - 1)
    return None


def is_terminal_vertex(dm: DistanceMatrix, s, u: int) -> bool:
    return bad_path(dm, s, u) is not None


def _all_terminal(dm: DistanceMatrix, mask: int) -> int | None:
    """First vertex outside ``mask`` that is not terminal, else None."""
    members = list(iter_bits(mask))
    outside = ((1 << dm.n) - 1) & ~mask
    for u in iter_bits(outside):
        for y in members:
            if dm.beyond(u, y) & mask:
                break
        else:
            return u
    return None


def terminal_failure(dm: DistanceMatrix, s) -> TerminalFailure | None:
    mask = as_mask(s)
    witness = find_collinear_triple(dm, mask)
    if witness is not None:
        return TerminalFailure("not-gp", witness=witness)
    addable = addable_after(dm, mask)
    if addable:
        return TerminalFailure("not-maximal", vertex=(addable & -addable).bit_length() - 1)
    u = _all_terminal(dm, mask)
    if u is not None:
        return TerminalFailure("not-terminal", vertex=u)
    return None


def is_terminal_set(dm: DistanceMatrix, s) -> bool:
    if not isinstance(dm, DistanceMatrix):
        dm = DistanceMatrix(dm)
    return terminal_failure(dm, s) is None


def iter_terminal_sets(g, budget: Budget = UNLIMITED):
    dm = _dm(g)
    for s in iter_maximal_gp_sets(dm, budget=budget):
        if _all_terminal(dm, s) is None:
            yield s


def terminal_numbers(g, budget: Budget = UNLIMITED) -> TerminalNumbers:
    """Exact tp and tp⁻ by filtering every maximal general position set.

    Witnesses are the first sets of extreme size in colex order.  A hit
    budget gives partial results with ``cap`` set.
    """
    dm = _dm(g)
    n = dm.n
    if n == 0:
        return TerminalNumbers(0, 0, VertexSet(0, 0), VertexSet(0, 0))
    budget.start()
    best_max = best_min = None
    maximal = terminal = 0
    cap = None
    try:
        for s in iter_maximal_gp_sets(dm, budget=budget):
            maximal += 1
            if budget.max_subset_size is not None and s.bit_count() > budget.max_subset_size:
                cap = f"max_subset_size={budget.max_subset_size}"
                continue
            if _all_terminal(dm, s) is not None:
                continue
            terminal += 1
            size = s.bit_count()
            if best_max is None or size > best_max.bit_count() or (size == best_max.bit_count() and s < best_max):
                best_max = s
            if best_min is None or size < best_min.bit_count() or (size == best_min.bit_count() and s < best_min):
                best_min = s
    except CapHit as hit:
        cap = hit.cap
    if cap is not None:
        return TerminalNumbers(
            None, None,
            VertexSet(best_max, n) if best_max is not None else None,
            VertexSet(best_min, n) if best_min is not None else None,
            maximal, terminal, cap,
        )
    if best_max is None:
        return TerminalNumbers(INFINITE, INFINITE, None, None, maximal, 0)
    return TerminalNumbers(
        best_max.bit_count(), best_min.bit_count(),
        VertexSet(best_max, n), VertexSet(best_min, n), maximal, terminal,
    )
