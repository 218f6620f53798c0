"""General position sets, lines and the geodetic number."""

from __future__ import annotations

from dataclasses import dataclass

from .distance import DistanceMatrix
from .errors import ContractError, ParameterError
from .graph import VertexSet, as_mask, iter_bits
from .search import (
    UNLIMITED,
    Budget,
    CapHit,
    SearchResult,
    addable_after,
    colex_combinations,
    walk_gp_sets,
)


@dataclass(frozen=True)
class CollinearWitness:
    """``y`` lies on a shortest x,z-path: d(x,z) = d(x,y) + d(y,z)."""

    x: int
    y: int
    z: int

    def check(self, dm: DistanceMatrix) -> bool:
        x, y, z = self.x, self.y, self.z
        return len({x, y, z}) == 3 and dm.same_component(x, z) and dm.same_component(x, y) \
            and dm.d(x, z) == dm.d(x, y) + dm.d(y, z)


@dataclass(frozen=True)
class LineResult:
    u: int
    v: int
    members: VertexSet


@dataclass(frozen=True)
class OrthogonalityViolation:
    """A shortest ``a``-``b`` path (``a`` in S1, ``b`` in S2) with too many members.

    ``via`` is an interior member of S1 ∪ S2, or None when the endpoints
    alone already count three or more times in the multiset.
    """

    a: int
    b: int
    via: int | None


def _dm(g_or_dm) -> DistanceMatrix:
    return g_or_dm if isinstance(g_or_dm, DistanceMatrix) else DistanceMatrix(g_or_dm)


def find_collinear_triple(dm: DistanceMatrix, s) -> CollinearWitness | None:
    mask = as_mask(s)
    members = list(iter_bits(mask))
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            hit = dm.collinear(a, b) & mask
            if hit:
                w = (hit & -hit).bit_length() - 1
                # Order the triple so the middle vertex is between the ends.
                da, db, dw = dm.d(a, b), dm.d(a, w), dm.d(b, w)
                if da == db + dw:
                    return CollinearWitness(a, w, b)
                if db == da + dw:
                    return CollinearWitness(a, b, w)
                return CollinearWitness(b, a, w)
    return None


def is_general_position(dm: DistanceMatrix, s) -> bool:
    return find_collinear_triple(dm, s) is None


def extending_vertex(dm: DistanceMatrix, s) -> int | None:
    """Lowest vertex whose addition keeps ``s`` in general position."""
    mask = as_mask(s)
    witness = find_collinear_triple(dm, mask)
    if witness is not None:
        raise ContractError("set is not in general position", witness)
    addable = addable_after(dm, mask)
    return (addable & -addable).bit_length() - 1 if addable else None


def is_maximal_gp(dm: DistanceMatrix, s) -> bool:
    return extending_vertex(dm, s) is None


def gp_number(g, budget: Budget = UNLIMITED) -> SearchResult:
    """Largest general position set, by branch and bound."""
    dm = _dm(g)
    if dm.n == 0:
        return SearchResult(0, VertexSet(0, 0))
    budget.start()
    best = [0, 0]
    chosen: list[int] = []

    def rec(s: int, cand: int) -> None:
        budget.tick()
        size = len(chosen)
        if size > best[0]:
            best[:] = [size, s]
        for v in iter_bits(cand):
            vb = 1 << v
            cand &= ~vb
            if size + 1 + cand.bit_count() <= best[0]:
                return
            forbid = 0
            for x in chosen:
                forbid |= dm.collinear(x, v)
            chosen.append(v)
            rec(s | vb, cand & ~forbid)
            chosen.pop()

    try:
        rec(0, (1 << dm.n) - 1)
    except CapHit as hit:
        return SearchResult(None, VertexSet(best[1], dm.n), cap=hit.cap, lower=best[0])
    return SearchResult(best[0], VertexSet(best[1], dm.n))


def lower_gp_number(g, budget: Budget = UNLIMITED) -> SearchResult:
    """Smallest maximal general position set, by ascending cardinality.

    ``budget.max_subset_size`` stops the ascent; the result is then
    inconclusive with ``lower`` = one more than the largest size ruled out.
    """
    dm = _dm(g)
    n = dm.n
    if n == 0:
        return SearchResult(0, VertexSet(0, 0))
    budget.start()
    cap_size = budget.max_subset_size
    k = 1
    try:
        while True:
            if cap_size is not None and k > cap_size:
                return SearchResult(None, None, cap=f"max_subset_size={cap_size}", lower=k)
            for s, addable in walk_gp_sets(dm, max_depth=k, min_depth=k, budget=budget):
                if not addable and s.bit_count() == k:
                    return SearchResult(k, VertexSet(s, n))
            k += 1
    except CapHit as hit:
        return SearchResult(None, None, cap=hit.cap, lower=k)


def line_of(dm: DistanceMatrix, u: int, v: int) -> LineResult:
    if u == v:
        raise ParameterError("a line needs two distinct vertices")
    if not dm.same_component(u, v):
        raise ParameterError(f"vertices {u} and {v} are in different components")
    return LineResult(u, v, VertexSet(dm.line(u, v), dm.n))


def has_universal_line(g) -> tuple[int, int] | None:
    """First pair (lexicographic) whose line covers every vertex."""
    dm = _dm(g)
    if not dm.connected:
        raise ParameterError("universal lines need a connected graph")
    full = (1 << dm.n) - 1
    for u in range(dm.n):
        for v in range(u + 1, dm.n):
            if dm.line(u, v) == full:
                return (u, v)
    return None


def adjacent_universal_pair(g) -> tuple[int, int] | None:
    """An edge ``uv`` such that ``{u, v}`` is a maximal general position set."""
    dm = _dm(g)
    full = (1 << dm.n) - 1
    graph = dm.graph
    for u, v in graph.edges():
        if dm.line(u, v) == full:
            return (u, v)
    return None


def is_geodetic(dm: DistanceMatrix, s) -> bool:
    mask = as_mask(s)
    covered = mask
    members = list(iter_bits(mask))
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            covered |= dm.interval(a, b)
    return covered == (1 << dm.n) - 1


def geodetic_number(g, budget: Budget = UNLIMITED) -> SearchResult:
    dm = _dm(g)
    if not dm.connected:
        raise ParameterError("geodetic number needs a connected graph")
    n = dm.n
    budget.start()
    try:
        for k in range(n + 1):
            if budget.max_subset_size is not None and k > budget.max_subset_size:
                return SearchResult(None, None, cap=f"max_subset_size={budget.max_subset_size}", lower=k)
            for combo in colex_combinations(n, k):
                budget.tick()
                if is_geodetic(dm, combo):
                    return SearchResult(k, VertexSet.of(combo, n))
    except CapHit as hit:
        return SearchResult(None, None, cap=hit.cap)
    raise AssertionError("the whole vertex set is always geodetic")


def are_orthogonal_gp(dm: DistanceMatrix, s1, s2) -> OrthogonalityViolation | None:
    """None when the two general position sets are orthogonal.

    Members of both sets count twice, so a shortest path between two sets
    may contain only its two endpoints, each counted once, unless it is the
    trivial path at a shared vertex.
    """
    m1, m2 = as_mask(s1), as_mask(s2)
    for s in (m1, m2):
        w = find_collinear_triple(dm, s)
        if w is not None:
            raise ContractError("orthogonality needs general position sets", w)
    both = m1 | m2

    def mult(v):
        return (m1 >> v & 1) + (m2 >> v & 1)

    for a in iter_bits(m1):
        for b in iter_bits(m2):
            if a == b or not dm.same_component(a, b):
                continue
            if mult(a) + mult(b) > 2:
                return OrthogonalityViolation(a, b, None)
            inner = dm.interval(a, b) & both & ~(1 << a) & ~(1 << b)
            if inner:
                return OrthogonalityViolation(a, b, (inner & -inner).bit_length() - 1)
    return None
