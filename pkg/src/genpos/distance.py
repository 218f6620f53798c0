"""All-pairs distances and the metric bitsets built on them."""

from __future__ import annotations

import numpy as np

from .errors import ContractError
from .graph import Graph, iter_bits


class _Unreachable:
    """Distance between different components.

    Any arithmetic or ordering on it is a bug in the caller, so it raises
    instead of behaving like a large number.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNREACHABLE"

    def _fail(self, *_):
        raise ContractError("arithmetic on UNREACHABLE distance")

    __add__ = __radd__ = __sub__ = __rsub__ = __lt__ = __le__ = __gt__ = __ge__ = _fail
    __abs__ = __neg__ = __int__ = __index__ = _fail

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()


def _bool_to_mask(arr: np.ndarray) -> int:
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


class DistanceMatrix:
    """BFS distances of a graph.

    ``d(u, v)`` returns an int or ``UNREACHABLE``. The set-valued helpers
    (``line``, ``interval``, ``beyond``) return bitsets and are memoised,
    because the searches call them for the same pairs over and over.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self.n = n = g.n
        dist = np.full((n, n), -1, dtype=np.int32)
        for s in range(n):
            dist[s, s] = 0
            seen = frontier = 1 << s
            level = 0
            while frontier:
                level += 1
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= g.adj[v]
                frontier = nxt & ~seen
                seen |= frontier
                for v in iter_bits(frontier):
                    dist[s, v] = level
        self._dist = dist
        self._comp = np.full(n, -1, dtype=np.int32)
        self.components = g.components()
        for i, comp in enumerate(self.components):
            for v in iter_bits(comp):
                self._comp[v] = i
        self._line: dict[tuple[int, int], int] = {}
        self._interval: dict[tuple[int, int], int] = {}
        self._beyond: dict[tuple[int, int], int] = {}

    def d(self, u: int, v: int):
        x = int(self._dist[u, v])
        return UNREACHABLE if x < 0 else x

    def row(self, u: int) -> list:
        return [self.d(u, v) for v in range(self.n)]

    def same_component(self, u: int, v: int) -> bool:
        return self._comp[u] == self._comp[v]

    @property
    def connected(self) -> bool:
        return len(self.components) <= 1

    def diameter(self):
        """Diameter, or UNREACHABLE for a disconnected graph."""
        if not self.connected:
            return UNREACHABLE
        return int(self._dist.max()) if self.n else 0

    def component_diameters(self) -> list[int]:
        out = []
        for comp in self.components:
            idx = list(iter_bits(comp))
            out.append(int(self._dist[np.ix_(idx, idx)].max()))
        return out

    def as_array(self) -> np.ndarray:
        """Copy of the distance matrix with -1 for unreachable pairs."""
        return self._dist.copy()

    def _component_rows(self, a: int, b: int):
        dist = self._dist
        same = self._comp == self._comp[a]
        return dist[a], dist[b], int(dist[a, b]), same

    def line(self, a: int, b: int) -> int:
        """Bitset of the line through ``a`` and ``b`` (both included)."""
        key = (a, b) if a < b else (b, a)
        mask = self._line.get(key)
        if mask is None:
            if not self.same_component(a, b):
                mask = (1 << a) | (1 << b)
            else:
                da, db, dab, same = self._component_rows(a, b)
                hit = same & ((da + db == dab) | (np.abs(da - db) == dab))
                mask = _bool_to_mask(hit)
            self._line[key] = mask
        return mask

    def collinear(self, a: int, b: int) -> int:
        """Vertices ``w`` outside ``{a, b}`` with ``{a, b, w}`` on one geodesic."""
        return self.line(a, b) & ~((1 << a) | (1 << b))

    def interval(self, a: int, b: int) -> int:
        """Vertices on some shortest a,b-path, endpoints included."""
        key = (a, b) if a < b else (b, a)
        mask = self._interval.get(key)
        if mask is None:
            if not self.same_component(a, b):
                mask = 0
            else:
                da, db, dab, same = self._component_rows(a, b)
                mask = _bool_to_mask(same & (da + db == dab))
            self._interval[key] = mask
        return mask

    def beyond(self, u: int, y: int) -> int:
        """Vertices ``x != y`` such that ``y`` lies on a shortest u,x-path."""
        key = (u, y)
        mask = self._beyond.get(key)
        if mask is None:
            if not self.same_component(u, y):
                mask = 0
            else:
                du, dy, duy, same = self._component_rows(u, y)
                mask = _bool_to_mask(same & (du == duy + dy)) & ~(1 << y)
            self._beyond[key] = mask
        return mask


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g)
