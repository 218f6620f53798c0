"""Constructive terminal sets.

Every function here checks its own output with ``terminal_failure`` and
raises ContractError if the result is not a terminal set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .distance import DistanceMatrix
from .errors import ContractError, ParameterError, UnsupportedClassError
from .graph import Graph, VertexSet, as_mask, induced_subgraph, iter_bits, lift
from .structure import is_chordal, is_cograph, maximum_clique, neighbourhood, twin_of


def _fmt(mask: int | None) -> str:
    if mask is None:
        return "-"
    return "{" + ", ".join(map(str, iter_bits(mask))) + "}"


@dataclass
class Stage:
    clique: int
    candidates: int | None = None
    r_pre: int | None = None
    r_post: int | None = None


@dataclass
class ConstructionTrace:
    method: str
    stages: list[Stage] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def cliques(self) -> list[int]:
        return [st.clique for st in self.stages]

    def union(self) -> int:
        out = 0
        for c in self.cliques:
            out |= c
        return out

    def lines(self) -> list[str]:
        return [
            f"W_{i} = {_fmt(st.clique)} | T = {_fmt(st.candidates)} | "
            f"R_pre = {_fmt(st.r_pre)} | R_post = {_fmt(st.r_post)}"
            for i, st in enumerate(self.stages, 1)
        ] + self.notes

    def __str__(self) -> str:
        return "\n".join(self.lines())


def _verified(dm: DistanceMatrix, mask: int, what: str) -> VertexSet:
    from .terminal import terminal_failure

    failure = terminal_failure(dm, mask)
    if failure is not None:
        raise ContractError(f"{what} produced a non-terminal set {_fmt(mask)}: {failure}", failure)
    return VertexSet(mask, dm.n)


def _connected_dm(g: Graph, max_diam: int) -> DistanceMatrix:
    dm = DistanceMatrix(g)
    if not dm.connected:
        raise ParameterError("construction needs a connected graph")
    if dm.diameter() > max_diam:
        raise ParameterError(f"diameter {dm.diameter()} exceeds {max_diam}")
    return dm


def construct_diam2(g: Graph) -> tuple[VertexSet, ConstructionTrace]:
    """Greedy independent union of cliques for a graph of diameter <= 2.

    Each step takes the largest clique among the vertices with no neighbour
    in the cliques chosen so far.
    """
    dm = _connected_dm(g, 2)
    trace = ConstructionTrace("diam2")
    chosen = 0
    eligible = g.full
    while eligible:
        w = maximum_clique(g, eligible)
        trace.stages.append(Stage(w, eligible))
        chosen |= w
        eligible &= ~chosen & ~neighbourhood(g, chosen)
    return _verified(dm, chosen, "construct_diam2"), trace


def _dist_to_clique(dm: DistanceMatrix, v: int, clique: int) -> int:
    return dm.d(v, (clique & -clique).bit_length() - 1)


def _equidistant(dm: DistanceMatrix, v: int, clique: int) -> bool:
    ds = {dm.d(v, w) for w in iter_bits(clique)}
    return len(ds) == 1


def construct_diam3(g: Graph) -> tuple[VertexSet, ConstructionTrace]:
    """Staged clique selection for a graph of diameter <= 3.

    W_1 is a maximum clique.  At each later stage the candidates T are the
    vertices with no edge to the chosen set that are equidistant from every
    chosen clique; R is a maximum clique of G[T], then for each earlier
    clique W_i in turn, if R has members at distance 2 and at distance 3
    from W_i, the distance-3 members are dropped.
    """
    dm = _connected_dm(g, 3)
    trace = ConstructionTrace("diam3")
    first = maximum_clique(g)
    trace.stages.append(Stage(first))
    cliques = [first]
    chosen = first
    while True:
        blocked = chosen | neighbourhood(g, chosen)
        cand = 0
        for v in iter_bits(g.full & ~blocked):
            if all(_equidistant(dm, v, c) for c in cliques):
                cand |= 1 << v
        if not cand:
            break
        r_pre = r = maximum_clique(g, cand)
        for c in cliques:
            far = 0
            near = 0
            for v in iter_bits(r):
                if _dist_to_clique(dm, v, c) == 3:
                    far |= 1 << v
                else:
                    near |= 1 << v
            if far and near:
                r = near
        if not r:
            raise ContractError(f"refinement emptied R = {_fmt(r_pre)}")
        trace.stages.append(Stage(r, cand, r_pre, r))
        cliques.append(r)
        chosen |= r
    return _verified(dm, chosen, "construct_diam3"), trace


def _subgraph_terminal(g: Graph, keep: int, s: int) -> str | None:
    """Failure message if ``s`` is not terminal in ``g[keep]``."""
    from .terminal import terminal_failure

    sub, old_of_new = induced_subgraph(g, keep)
    new_of_old = {old: new for new, old in enumerate(old_of_new)}
    if s & ~keep:
        return "set is not inside the subgraph"
    failure = terminal_failure(DistanceMatrix(sub), [new_of_old[v] for v in iter_bits(s)])
    return None if failure is None else str(failure)


def extend_terminal(g: Graph, removed: int, s, kind: str) -> VertexSet:
    """Lift a terminal set of ``g - removed`` to one of ``g``.

    ``s`` uses the vertex numbering of ``g``.  ``kind`` is ``"simplicial"``
    (``removed`` is simplicial in ``g``) or ``"twin"`` (``removed`` has an
    open or closed twin in ``g``).
    """
    mask = as_mask(s)
    xb = 1 << removed
    problem = _subgraph_terminal(g, g.full & ~xb, mask)
    if problem is not None:
        raise ContractError(f"not a terminal set of G - {removed}: {problem}")
    if kind == "simplicial":
        if not g.is_clique(g.adj[removed]):
            raise ContractError(f"vertex {removed} is not simplicial")
        out = mask | xb if mask == g.adj[removed] else mask
    elif kind == "twin":
        y = twin_of(g, removed)
        if y is None:
            raise ContractError(f"vertex {removed} has no twin")
        if not mask >> y & 1:
            out = mask
        elif not mask & g.adj[y] & ~xb:
            out = mask | xb
        elif g.has_edge(removed, y):
            out = mask | xb
        else:
            out = mask
    else:
        raise ParameterError(f"unknown extension kind {kind!r}")
    return _verified(DistanceMatrix(g), out, f"extend_terminal({kind})")


def clique_cutset_components(g: Graph, w: int) -> list[int]:
    """Components of ``g - w``, ordered by smallest vertex."""
    sub, old_of_new = induced_subgraph(g, g.full & ~w)
    return [lift(c, old_of_new) for c in sub.components()]


def combine_clique_cutset(g: Graph, w, per_component) -> VertexSet:
    """Terminal set of ``g`` from terminal sets of each ``g[C ∪ W]``.

    ``per_component[i]`` belongs to the i-th component of ``g - w`` in the
    order of :func:`clique_cutset_components`, numbered as in ``g``.
    """
    wm = as_mask(w)
    if not wm or not g.is_clique(wm):
        raise ContractError(f"{_fmt(wm)} is not a clique")
    comps = clique_cutset_components(g, wm)
    if len(comps) < 2:
        raise ContractError(f"{_fmt(wm)} is not a cut-set")
    sets = [as_mask(s) for s in per_component]
    if len(sets) != len(comps):
        raise ContractError(f"expected {len(comps)} component sets, got {len(sets)}")
    for comp, s in zip(comps, sets):
        problem = _subgraph_terminal(g, comp | wm, s)
        if problem is not None:
            raise ContractError(f"component set {_fmt(s)} is not terminal in G[C ∪ W]: {problem}")
    if all(s == wm for s in sets):
        out = wm
    else:
        picks = [s for comp, s in zip(comps, sets) if s & comp]
        if not picks:
            raise ContractError("no component set meets its component")
        out = picks[0]
    return _verified(DistanceMatrix(g), out, "combine_clique_cutset")


def _structured(g: Graph, trace: ConstructionTrace) -> int:
    if g.n == 0:
        return 0
    if g.n == 1:
        return 1
    comps = g.components()
    if len(comps) > 1:
        out = 0
        for comp in comps:
            sub, old_of_new = induced_subgraph(g, comp)
            out |= lift(_structured(sub, trace), old_of_new)
        return out
    if is_chordal(g):
        u = next(v for v in range(g.n) if g.is_clique(g.adj[v]))
        kind = "simplicial"
    elif is_cograph(g):
        u = next(v for v in range(g.n - 1, -1, -1) if twin_of(g, v) is not None)
        kind = "twin"
    else:
        dm = DistanceMatrix(g)
        if dm.diameter() <= 2:
            s, sub_trace = construct_diam2(g)
        elif dm.diameter() <= 3:
            s, sub_trace = construct_diam3(g)
        else:
            raise UnsupportedClassError("graph is not chordal, not a cograph and has diameter > 3")
        trace.notes.append(f"{sub_trace.method} on {g.n} vertices -> {s}")
        return s.bits
    sub, old_of_new = g.remove_vertex(u)
    inner = lift(_structured(sub, trace), old_of_new)
    out = extend_terminal(g, u, inner, kind).bits
    trace.notes.append(f"{kind} {u}: {_fmt(inner)} -> {_fmt(out)}")
    return out


def construct_structured(g: Graph) -> tuple[VertexSet, ConstructionTrace]:
    """Terminal set for chordal graphs, cographs and their disjoint unions.

    Chordal graphs peel a simplicial vertex, cographs peel a twin; anything
    else of diameter <= 3 falls back to the diameter constructions.
    """
    trace = ConstructionTrace("structured")
    mask = _structured(g, trace)
    return _verified(DistanceMatrix(g), mask, "construct_structured"), trace
