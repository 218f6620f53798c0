"""Named verification suites for the ``suite`` subcommand.

Each suite returns a list of :class:`Check`; a suite passes when every
check does.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .construct import construct_diam2, construct_diam3, construct_structured
from .corpus import connected_graphs_up_to
from .distance import DistanceMatrix
from .errors import ContractError
from .families import (
    Complete,
    CompleteMultipartite,
    Cycle,
    Kneser2,
    LineOfComplete,
    Wheel,
    make_family,
)
from .graph import cartesian_product
from .position import gp_number, lower_gp_number
from .product import (
    clique_product_witness,
    layer_embed_check,
    multipartite_product_witness,
    universal_line_product_criterion,
)
from .scan import scan_pairs_conjecture, scan_terminal_existence
from .search import iter_maximal_gp_sets
from .structure import is_chordal, is_cograph
from .terminal import iter_terminal_sets, terminal_numbers


@dataclass
class Check:
    name: str
    expected: object
    observed: object
    ok: bool
    elapsed_ms: float = 0.0

    def to_dict(self, timing: bool = True) -> dict:
        d = {"check": self.name, "expected": self.expected, "observed": self.observed,
             "status": "PASS" if self.ok else "FAIL"}
        if timing:
            d["elapsed_ms"] = round(self.elapsed_ms, 3)
        return d


def _eq(name, expected, compute) -> Check:
    t0 = time.perf_counter()
    observed = compute()
    return Check(name, expected, observed, observed == expected, (time.perf_counter() - t0) * 1000)


def _tp_pair(spec):
    res = terminal_numbers(make_family(spec))
    return [res.tp, res.tp_minus]


def suite_petersen():
    g = make_family(Kneser2(5))
    return [
        _eq("gp(K(5,2))", 6, lambda: gp_number(g).count),
        _eq("gp-(K(5,2))", 4, lambda: lower_gp_number(g).count),
        _eq("tp,tp-(K(5,2))", [6, 6], lambda: _tp_pair(Kneser2(5))),
    ]


def suite_kneser():
    return [_eq(f"tp,tp-(K({n},2))", [6, 6] if n == 5 else [n // 2] * 2, lambda n=n: _tp_pair(Kneser2(n)))
            for n in range(5, 9)]


def suite_linegraph():
    out = []
    for n in (4, 5, 6):
        expected_tp = n if n % 3 == 0 else n - 1
        out.append(_eq(f"tp(L(K{n}))", expected_tp, lambda n=n: _tp_pair(LineOfComplete(n))[0]))
        out.append(_eq(f"tp-(L(K{n}))", n - 1, lambda n=n: _tp_pair(LineOfComplete(n))[1]))
    return out


def suite_multipartite():
    return [_eq(f"tp,tp-(K{parts})", [len(parts)] * 2, lambda p=parts: _tp_pair(CompleteMultipartite(p)))
            for parts in ([2, 2], [3, 2], [2, 2, 2], [3, 3, 2], [4, 3, 2])]


def suite_realisation():
    out = []
    for x in (2, 3, 4):
        g = make_family(CompleteMultipartite([4, x, 2]))

        def values(g=g):
            tn = terminal_numbers(g)
            return [lower_gp_number(g).count, tn.tp, tn.tp_minus, gp_number(g).count]

        out.append(_eq(f"gp-,tp,tp-,gp(K(4,{x},2))", [2, 3, 3, 4], values))
    return out


def suite_products_clique():
    out = []
    for orders, value in (([2, 3], 2), ([3, 3], 3), ([3, 4], 3), ([2, 5], 2), ([4, 4], 4)):
        out.append(_eq(f"gp-(K{orders[0]} x K{orders[1]})", value, lambda o=orders: clique_product_witness(o).exact))
    out.append(_eq("K3xK4xK5 clique layer maximal", True,
                   lambda: clique_product_witness([3, 4, 5]).consistent))
    return out


def _product_gp_minus(a, b):
    prod, _ = cartesian_product(make_family(a), make_family(b))
    return lower_gp_number(prod).count


def suite_odd_cycle():
    return [
        _eq("gp-(C5 x K3)", 3, lambda: _product_gp_minus(Cycle(5), Complete(3))),
        _eq("gp-(C5 x C5)", 3, lambda: _product_gp_minus(Cycle(5), Cycle(5))),
        _eq("gp-(C3 x C5)", 3, lambda: _product_gp_minus(Cycle(3), Cycle(5))),
        _eq("gp-(W6 x C5)", 3, lambda: _product_gp_minus(Wheel(6), Cycle(5))),
    ]


def suite_multipartite_product():
    def run(pg, ph):
        rep = multipartite_product_witness(pg, ph)
        return {"exact": rep.exact, "consistent": rep.consistent}

    return [
        _eq("K3,3,3 x K3,3,3", {"exact": 3, "consistent": True}, lambda: run([3, 3, 3], [3, 3, 3])),
        _eq("K2,2 x K3,3,3", {"exact": 2, "consistent": True}, lambda: run([2, 2], [3, 3, 3])),
        _eq("K2,2,2 x K2,2,2", {"exact": 2, "consistent": True}, lambda: run([2, 2, 2], [2, 2, 2])),
    ]


def _factor_pairs(max_order):
    graphs = [g for _, g in connected_graphs_up_to(max_order, 2)]
    return [(g, h) for g in graphs for h in graphs]


def suite_universal_line():
    def mismatches():
        return sum(not universal_line_product_criterion(g, h).agree for g, h in _factor_pairs(4))

    return [_eq("criterion vs brute force, factors of order 2..4", 0, mismatches)]


def suite_layer_maximality():
    def mismatches():
        bad = 0
        for g, h in _factor_pairs(4):
            for s in iter_maximal_gp_sets(DistanceMatrix(g)):
                bad += not layer_embed_check(g, h, s, 0).agree
        return bad

    return [_eq("layer maximality iff terminal, factors of order 2..4", 0, mismatches)]


def _construction_failures(max_order):
    fails = {"diam2": 0, "diam3": 0, "structured": 0}
    for _, g in connected_graphs_up_to(max_order):
        diam = DistanceMatrix(g).diameter()
        jobs = []
        if diam <= 2:
            jobs.append(("diam2", construct_diam2))
        if diam == 3:
            jobs.append(("diam3", construct_diam3))
        if is_chordal(g) or is_cograph(g):
            jobs.append(("structured", construct_structured))
        for name, fn in jobs:
            try:
                fn(g)
            except ContractError:
                fails[name] += 1
    return fails


def suite_constructions():
    return [_eq("construction failures, order <= 7", {"diam2": 0, "diam3": 0, "structured": 0},
                lambda: _construction_failures(7))]


def suite_scans():
    return [
        _eq("pair conjecture counterexamples, order <= 4", 0, lambda: len(scan_pairs_conjecture(4).counterexamples)),
        _eq("terminal existence counterexamples, order <= 7", 0,
            lambda: len(scan_terminal_existence(7).counterexamples)),
    ]


def suite_diam2_independence():
    def independent_terminal_sets():
        count = 0
        for _, g in connected_graphs_up_to(6):
            if DistanceMatrix(g).diameter() != 2:
                continue
            count += sum(g.is_independent(s) for s in iter_terminal_sets(g))
        return count

    return [_eq("independent terminal sets in diameter-2 graphs, order <= 6", 0, independent_terminal_sets)]


SUITES = {
    "petersen": suite_petersen,
    "kneser": suite_kneser,
    "linegraph": suite_linegraph,
    "multipartite": suite_multipartite,
    "realisation": suite_realisation,
    "products-clique": suite_products_clique,
    "odd-cycle": suite_odd_cycle,
    "multipartite-product": suite_multipartite_product,
    "universal-line": suite_universal_line,
    "layer-maximality": suite_layer_maximality,
    "constructions": suite_constructions,
    "scans": suite_scans,
    "diam2-independence": suite_diam2_independence,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return [c for fn in SUITES.values() for c in fn()]
    return SUITES[name]()
