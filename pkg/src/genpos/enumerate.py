"""Isomorphism classes of small connected graphs.

The canonical form of a graph on n <= 6 vertices is the lexicographically
smallest upper-triangle adjacency bit-string over all n! relabellings.
Bit-strings are packed into integers with the first pair (0,1) as the most
significant bit, so lexicographic minimum is integer minimum.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator

import numpy as np

from .errors import CapacityError, ParameterError
from .graph import Graph, from_edge_list

MAX_ENUMERATION_ORDER = 6


@lru_cache(maxsize=None)
def _perm_table(n: int) -> tuple[np.ndarray, list[tuple[int, int]]]:
    pairs = list(combinations(range(n), 2))
    pos = {p: k for k, p in enumerate(pairs)}
    top = len(pairs) - 1
    rows = []
    for perm in permutations(range(n)):
        row = []
        for i, j in pairs:
            a, b = perm[i], perm[j]
            row.append(1 << (top - pos[(a, b) if a < b else (b, a)]))
        rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(pairs)), pairs


def canonical_code(g: Graph) -> int:
    if g.n > MAX_ENUMERATION_ORDER:
        raise CapacityError(f"canonical form only for n <= {MAX_ENUMERATION_ORDER}")
    if g.n < 2:
        return 0
    table, pairs = _perm_table(g.n)
    present = [k for k, (i, j) in enumerate(pairs) if g.has_edge(i, j)]
    if not present:
        return 0
    return int(table[:, present].sum(axis=1).min())


def graph_from_code(n: int, code: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    top = len(pairs) - 1
    return from_edge_list(n, [p for k, p in enumerate(pairs) if code >> (top - k) & 1])


def canonical_form(g: Graph) -> Graph:
    return graph_from_code(g.n, canonical_code(g))


def canonical_id(g: Graph) -> str:
    """Stable text id ``n<order>c<code>``."""
    return f"n{g.n}c{canonical_code(g)}"


@lru_cache(maxsize=None)
def _all_classes(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    classes = set()
    for code in _all_classes(n - 1):
        base = graph_from_code(n - 1, code)
        for nbrs in range(1 << (n - 1)):
            extra = [(v, n - 1) for v in range(n - 1) if nbrs >> v & 1]
            g = from_edge_list(n, base.edges() + extra)
            classes.add(canonical_code(g))
    return tuple(sorted(classes))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All graphs on ``n`` vertices up to isomorphism, in canonical order."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        if n > MAX_ENUMERATION_ORDER:
            raise CapacityError(f"enumeration supports n <= {MAX_ENUMERATION_ORDER}; ingest graph6 for larger orders")
        raise ParameterError(f"n must be >= 1, got {n}")
    for code in _all_classes(n):
        yield graph_from_code(n, code)


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    for g in enumerate_graphs(n):
        if g.is_connected():
            yield g
