"""Conjecture scans over graph corpora."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .codecs import encode_graph6
from .corpus import connected_graphs_up_to
from .errors import ParameterError, ParseError
from .graph import Graph, cartesian_product, induced_subgraph
from .position import lower_gp_number
from .search import Budget
from .structure import closed_twins, maximal_clique_masks, open_twins, simplicial_vertices
from .terminal import INFINITE, terminal_numbers

MAX_PAIR_SCAN_ORDER = 5


@dataclass
class ScanResult:
    checked: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    inconclusive: list[dict] = field(default_factory=list)
    parse_errors: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _source(source, min_order: int):
    if isinstance(source, int):
        return connected_graphs_up_to(source, min_order)
    return source


def scan_pairs_conjecture(source, budget_limits: dict | None = None, min_order: int = 2) -> ScanResult:
    """Check gp⁻(G □ H) >= min(gp⁻(G), gp⁻(H)) over all ordered pairs.

    ``source`` is a maximum order (connected graphs of order ``min_order``
    up to it) or an iterable of ``(id, Graph)``.  A pair whose product
    search hits a cap is recorded as inconclusive, never as a
    counterexample.
    """
    if isinstance(source, int):
        check_pair_order(source)
    limits = budget_limits or {}
    graphs = [(gid, g) for gid, g in _source(source, min_order) if isinstance(g, Graph)]
    lower = {}
    for gid, g in graphs:
        res = lower_gp_number(g)
        lower[gid] = res.count
    out = ScanResult()
    for gid, g in graphs:
        for hid, h in graphs:
            prod, _ = cartesian_product(g, h)
            bound = min(lower[gid], lower[hid])
            res = lower_gp_number(prod, Budget(**limits))
            out.checked += 1
            rec = {"g": gid, "h": hid, "gp-_g": lower[gid], "gp-_h": lower[hid]}
            if res.inconclusive:
                # Ruling out every size below the bound already settles the pair.
                if res.lower is not None and res.lower >= bound:
                    continue
                out.inconclusive.append({**rec, "cap": res.cap})
            elif res.count < bound:
                out.counterexamples.append({**rec, "gp-_product": res.count, "witness": res.witness.to_list()})
    return out


def has_clique_cutset(g: Graph) -> list[int] | None:
    """A clique whose removal disconnects ``g``, or None."""
    if not g.is_connected():
        return []
    seen = set()
    for clique in maximal_clique_masks(g):
        members = [v for v in range(g.n) if clique >> v & 1]
        for k in range(1, len(members) + 1):
            for sub in combinations(members, k):
                mask = sum(1 << v for v in sub)
                if mask in seen or mask == g.full:
                    continue
                seen.add(mask)
                rest, _ = induced_subgraph(g, g.full & ~mask)
                if not rest.is_connected():
                    return list(sub)
    return None


def minimal_counterexample_profile(g: Graph) -> dict:
    """Properties any smallest graph without a terminal set must have."""
    return {
        "connected": g.is_connected(),
        "no_simplicial": not simplicial_vertices(g),
        "no_clique_cutset": has_clique_cutset(g) is None,
        "twin_free": not open_twins(g) and not closed_twins(g),
    }


def scan_terminal_existence(source, budget_limits: dict | None = None) -> ScanResult:
    """Every connected graph should have a terminal set (finite tp).

    ``source`` is a maximum order or an iterable of ``(id, Graph)``.
    """
    limits = budget_limits or {}
    out = ScanResult()
    for gid, g in _source(source, 1):
        if isinstance(g, ParseError):
            out.parse_errors.append({"g": gid, "error": str(g)})
            continue
        if not g.is_connected():
            continue
        res = terminal_numbers(g, Budget(**limits))
        out.checked += 1
        if res.has_terminal_set:
            continue
        if res.cap is not None:
            out.inconclusive.append({"g": gid, "cap": res.cap})
        elif res.tp == INFINITE:
            out.counterexamples.append({"g": gid, "graph6": encode_graph6(g), **minimal_counterexample_profile(g)})
    return out


def check_pair_order(max_order: int) -> None:
    if max_order > MAX_PAIR_SCAN_ORDER:
        raise ParameterError(f"pair scans by enumeration support max_order <= {MAX_PAIR_SCAN_ORDER}")
