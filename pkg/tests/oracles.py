"""Brute-force reference implementations used only by the tests.

They work from explicit shortest paths (networkx) and exhaustive subset
enumeration, not from the distance identities the library uses.
"""

from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx

from genpos.families import (
    Complete,
    CompleteMinusEdge,
    CompleteMultipartite,
    Cycle,
    Kneser2,
    LineOfComplete,
    Path,
    Wheel,
    make_family,
)


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


class PathOracle:
    def __init__(self, g):
        self.n = g.n
        self.G = to_nx(g)
        self._paths = {}

    def paths(self, x, z):
        key = (x, z)
        if key not in self._paths:
            try:
                self._paths[key] = [tuple(p) for p in nx.all_shortest_paths(self.G, x, z)]
            except nx.NetworkXNoPath:
                self._paths[key] = []
        return self._paths[key]

    def in_general_position(self, s):
        s = set(s)
        for x, z in combinations(sorted(s), 2):
            for p in self.paths(x, z):
                if len(s.intersection(p)) > 2:
                    return False
        return True

    def is_maximal_gp(self, s):
        s = set(s)
        return self.in_general_position(s) and not any(
            self.in_general_position(s | {v}) for v in range(self.n) if v not in s
        )

    def is_terminal_vertex(self, s, u):
        s = set(s)
        for x in range(self.n):
            if x == u:
                continue
            for p in self.paths(u, x):
                if len(s.intersection(p)) >= 2:
                    return True
        return False

    def is_terminal_set(self, s):
        s = set(s)
        return self.is_maximal_gp(s) and all(self.is_terminal_vertex(s, u) for u in range(self.n) if u not in s)

    def covers(self, s):
        covered = set(s)
        for x, z in combinations(sorted(s), 2):
            for p in self.paths(x, z):
                covered.update(p)
        return len(covered) == self.n

    def subsets(self):
        for k in range(self.n + 1):
            yield from combinations(range(self.n), k)

    def gp_sets(self):
        return [set(s) for s in self.subsets() if self.in_general_position(s)]

    def maximal_gp_sets(self):
        gp = self.gp_sets()
        keys = {frozenset(s) for s in gp}
        return [s for s in gp if not any(frozenset(s | {v}) in keys for v in range(self.n) if v not in s)]

    def gp(self):
        return max(len(s) for s in self.gp_sets())

    def gp_minus(self):
        return min(len(s) for s in self.maximal_gp_sets())

    def terminal_sets(self):
        return [s for s in self.maximal_gp_sets()
                if all(self.is_terminal_vertex(s, u) for u in range(self.n) if u not in s)]

    def geodetic(self):
        return min(len(s) for s in self.subsets() if self.covers(s))


def line_by_definition(dist, u, v):
    d = dist
    return {w for w in d if d[u][v] == d[u][w] + d[w][v] or d[u][v] == abs(d[u][w] - d[w][v])}


def nx_distances(g):
    return dict(nx.all_pairs_shortest_path_length(to_nx(g)))


def _edge_key(n, edges):
    return tuple(sorted(tuple(sorted(e)) for e in edges))


def classes_by_brute_force(n, connected_only=True):
    """Isomorphism classes of labelled graphs on n vertices (n <= 5)."""
    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    seen = set()
    for bits in range(1 << len(pairs)):
        edges = [p for k, p in enumerate(pairs) if bits >> k & 1]
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(edges)
        if connected_only and not nx.is_connected(G):
            continue
        key = min(_edge_key(n, [(p[a], p[b]) for a, b in edges]) for p in perms)
        seen.add(key)
    return seen


def has_induced_p4(g):
    G = to_nx(g)
    for quad in combinations(range(g.n), 4):
        H = G.subgraph(quad)
        if H.number_of_edges() == 3 and nx.is_connected(H) and max(d for _, d in H.degree()) == 2:
            return True
    return False


@lru_cache(maxsize=None)
def connected_upto(max_order):
    from genpos.corpus import connected_graphs

    return tuple(g for n in range(1, max_order + 1) for g in connected_graphs(n))


def fam(kind, *args):
    table = {
        "path": Path,
        "cycle": Cycle,
        "complete": Complete,
        "wheel": Wheel,
        "kneser2": Kneser2,
        "k-minus": CompleteMinusEdge,
        "line": LineOfComplete,
    }
    if kind == "multipartite":
        return make_family(CompleteMultipartite(args))
    return make_family(table[kind](*args))
