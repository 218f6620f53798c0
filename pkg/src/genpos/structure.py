"""Cliques, simplicial vertices, twins, chordality and cograph tests."""

from __future__ import annotations

from dataclasses import dataclass, field

from .distance import DistanceMatrix
from .graph import Graph, VertexSet, as_mask, iter_bits


def _bron_kerbosch(adj, p: int, out: list[int]) -> None:
    # Pivot maximises |P ∩ N(u)|; ties go to the lowest index.
    stack = [(0, p, 0)]
    while stack:
        r, p, x = stack.pop()
        if not p:
            if not x:
                out.append(r)
            continue
        best, pivot = -1, -1
        for u in iter_bits(p | x):
            c = (p & adj[u]).bit_count()
            if c > best:
                best, pivot = c, u
        branches = []
        for v in iter_bits(p & ~adj[pivot]):
            vb = 1 << v
            branches.append((r | vb, p & adj[v], x & adj[v]))
            p &= ~vb
            x |= vb
        # LIFO stack: push in reverse so the lowest vertex is explored first.
        stack.extend(reversed(branches))


def maximal_clique_masks(g: Graph, within: int | None = None) -> list[int]:
    p = g.full if within is None else within
    out: list[int] = []
    if p:
        _bron_kerbosch(g.adj, p, out)
    return out


def maximal_cliques(g: Graph) -> list[VertexSet]:
    return [VertexSet(c, g.n) for c in maximal_clique_masks(g)]


def maximum_clique(g: Graph, within: int | None = None) -> int:
    """Largest clique inside ``within``; ties go to the colex-smallest.

    Colex order on sets is numeric order on their bitsets, hence ``min``.
    """
    cliques = maximal_clique_masks(g, within)
    if not cliques:
        return 0
    size = max(c.bit_count() for c in cliques)
    return min(c for c in cliques if c.bit_count() == size)


def is_simplicial(g: Graph, u: int) -> bool:
    return g.is_clique(g.adj[u])


def simplicial_vertices(g: Graph) -> list[int]:
    return [u for u in range(g.n) if is_simplicial(g, u)]


def open_twins(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.adj[u] == g.adj[v]]


def closed_twins(g: Graph) -> list[tuple[int, int]]:
    return [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if g.adj[u] | 1 << u == g.adj[v] | 1 << v
    ]


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visit order (ties to lowest index)."""
    weight = [0] * g.n
    unvisited = g.full
    order = []
    while unvisited:
        v = max(iter_bits(unvisited), key=lambda u: (weight[u], -u))
        order.append(v)
        unvisited &= ~(1 << v)
        for u in iter_bits(g.adj[v] & unvisited):
            weight[u] += 1
    return order


def is_chordal(g: Graph) -> bool:
    # The reverse of an MCS order is a perfect elimination ordering iff G is chordal.
    earlier = 0
    for v in mcs_order(g):
        if not g.is_clique(g.adj[v] & earlier):
            return False
        earlier |= 1 << v
    return True


def _components_within(mask: int, nbrs) -> list[int]:
    comps = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = frontier = low
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= nbrs(v)
            frontier = nxt & mask & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def is_cograph(g: Graph) -> bool:
    """P4-free test via the cotree characterisation.

    A graph on two or more vertices is a cograph iff it or its complement
    is disconnected and every such component is again a cograph.
    """
    adj = g.adj

    def check(mask: int) -> bool:
        if mask & (mask - 1) == 0:
            return True
        comps = _components_within(mask, lambda v: adj[v])
        if len(comps) == 1:
            comps = _components_within(mask, lambda v: ~adj[v] & ~(1 << v))
            if len(comps) == 1:
                return False
        return all(check(c) for c in comps)

    return check(g.full)


@dataclass
class StructuralReport:
    connected: bool
    components: list[list[int]]
    diameters: list[int]
    simplicial: list[int]
    open_twins: list[tuple[int, int]]
    closed_twins: list[tuple[int, int]]
    chordal: bool
    cograph: bool
    extra: dict = field(default_factory=dict)

    @property
    def diameter(self):
        return self.diameters[0] if self.connected and self.diameters else None


def structural_report(g: Graph, dm: DistanceMatrix | None = None) -> StructuralReport:
    dm = dm or DistanceMatrix(g)
    return StructuralReport(
        connected=dm.connected,
        components=[list(iter_bits(c)) for c in dm.components],
        diameters=dm.component_diameters(),
        simplicial=simplicial_vertices(g),
        open_twins=open_twins(g),
        closed_twins=closed_twins(g),
        chordal=is_chordal(g),
        cograph=is_cograph(g),
    )


def twin_of(g: Graph, u: int) -> int | None:
    """Some vertex that is an open or closed twin of ``u``."""
    for v in range(g.n):
        if v != u and (g.adj[u] == g.adj[v] or g.adj[u] | 1 << u == g.adj[v] | 1 << v):
            return v
    return None


def neighbourhood(g: Graph, s) -> int:
    """Union of open neighbourhoods of the members of ``s``."""
    out = 0
    for v in iter_bits(as_mask(s)):
        out |= g.adj[v]
    return out
