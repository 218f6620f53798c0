"""Immutable simple graphs with bitset adjacency.

Vertex sets are Python ints used as bitsets (bit ``v`` set means vertex
``v`` is a member), so there is no 64-vertex word limit: products of
larger factors simply get wider integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapacityError, ContractError, ParameterError, ParseError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def as_mask(s) -> int:
    """Accept a VertexSet, an int bitset or an iterable of vertices."""
    if isinstance(s, VertexSet):
        return s.bits
    if isinstance(s, int):
        return s
    return bits_of(s)


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``{0, ..., n-1}`` stored as a bitset."""

    bits: int
    n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise ParameterError(f"vertex set {self.bits:#x} exceeds 0..{self.n - 1}")

    @classmethod
    def of(cls, vertices, n: int) -> "VertexSet":
        return cls(as_mask(vertices), n)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return bool(self.bits >> v & 1)

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self)) + "}"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[u]`` is the open neighbourhood of ``u`` as a bitset.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ContractError("adjacency rows do not match vertex count")
        for u, row in enumerate(self.adj):
            if row >> u & 1:
                raise ContractError(f"self-loop at {u}")
            if row >> self.n:
                raise ContractError(f"row {u} has out-of-range neighbours")
            for v in iter_bits(row):
                if not self.adj[v] >> u & 1:
                    raise ContractError(f"asymmetric adjacency {u}-{v}")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def neighbours(self, u: int) -> list[int]:
        return list(iter_bits(self.adj[u]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def vertex_set(self, vertices) -> VertexSet:
        return VertexSet.of(vertices, self.n)

    def is_clique(self, mask: int) -> bool:
        return all(mask & ~(1 << v) & ~self.adj[v] == 0 for v in iter_bits(mask))

    def is_independent(self, mask: int) -> bool:
        return all(mask & self.adj[v] == 0 for v in iter_bits(mask))

    def components(self) -> list[int]:
        """Connected components as bitsets, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def remove_vertex(self, u: int) -> tuple["Graph", list[int]]:
        return induced_subgraph(self, self.full & ~(1 << u))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise ParseError(f"negative vertex count {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ParseError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def induced_subgraph(g: Graph, w) -> tuple[Graph, list[int]]:
    """Relabelled ``g[w]`` plus ``old_of_new`` (new index -> old vertex)."""
    mask = as_mask(w)
    if not mask:
        raise ParameterError("induced subgraph of the empty set")
    old_of_new = list(iter_bits(mask))
    new_of_old = {old: new for new, old in enumerate(old_of_new)}
    adj = []
    for old in old_of_new:
        adj.append(bits_of(new_of_old[x] for x in iter_bits(g.adj[old] & mask)))
    return Graph(len(old_of_new), tuple(adj)), old_of_new


def lift(mask: int, old_of_new: list[int]) -> int:
    """Map a bitset of a relabelled subgraph back to parent indices."""
    return bits_of(old_of_new[v] for v in iter_bits(mask))


@dataclass(frozen=True)
class ProductIndex:
    """Bijection ``(g, h) <-> g * nH + h`` for the vertices of G □ H."""

    nG: int
    nH: int

    def encode(self, g: int, h: int) -> int:
        return g * self.nH + h

    def decode(self, v: int) -> tuple[int, int]:
        return divmod(v, self.nH)

    def left_layer(self, h: int) -> int:
        """Bitset of the G-layer through ``h``."""
        return bits_of(self.encode(g, h) for g in range(self.nG))

    def right_layer(self, g: int) -> int:
        return bits_of(self.encode(g, h) for h in range(self.nH))

    def embed_left(self, s, h: int) -> int:
        """``S × {h}`` as a product bitset."""
        return bits_of(self.encode(g, h) for g in iter_bits(as_mask(s)))

    def embed_right(self, g: int, s) -> int:
        return bits_of(self.encode(g, h) for h in iter_bits(as_mask(s)))


MAX_PRODUCT_ORDER = 4096


def cartesian_product(g: Graph, h: Graph) -> tuple[Graph, ProductIndex]:
    if g.n == 0 or h.n == 0:
        raise ParameterError("product factors must be non-empty")
    if g.n * h.n > MAX_PRODUCT_ORDER:
        raise CapacityError(f"product of order {g.n * h.n} exceeds {MAX_PRODUCT_ORDER}")
    idx = ProductIndex(g.n, h.n)
    adj = []
    for a in range(g.n):
        for b in range(h.n):
            row = 0
            for a2 in iter_bits(g.adj[a]):
                row |= 1 << idx.encode(a2, b)
            for b2 in iter_bits(h.adj[b]):
                row |= 1 << idx.encode(a, b2)
            adj.append(row)
    return Graph(g.n * h.n, tuple(adj)), idx


def product_of_many(factors: list[Graph]) -> tuple[Graph, list[tuple[int, ...]]]:
    """Iterated product; also returns the coordinate tuple of every vertex."""
    if not factors:
        raise ParameterError("need at least one factor")
    graph = factors[0]
    coords = [(v,) for v in range(graph.n)]
    for f in factors[1:]:
        graph, idx = cartesian_product(graph, f)
        coords = [coords[idx.decode(v)[0]] + (idx.decode(v)[1],) for v in range(graph.n)]
    return graph, coords
