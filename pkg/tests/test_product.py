from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genpos.distance import DistanceMatrix
from genpos.errors import ContractError, ParameterError
from genpos.graph import cartesian_product
from genpos.product import (
    clique_product_witness,
    layer_embed_check,
    multipartite_product_witness,
    orthogonal_layers,
    universal_line_product_criterion,
)
from genpos.scan import has_clique_cutset, minimal_counterexample_profile, scan_pairs_conjecture
from genpos.search import iter_maximal_gp_sets

from oracles import PathOracle, connected_upto, fam, line_by_definition, nx_distances

SMALL = [g for g in connected_upto(4) if g.n >= 2]


def _universal_line_by_definition(g):
    dist = nx_distances(g)
    return any(len(line_by_definition(dist, u, v)) == g.n for u, v in combinations(range(g.n), 2))


@pytest.mark.parametrize("g", SMALL, ids=lambda g: f"n{g.n}m{g.m}")
def test_universal_line_observation_matches_definition(g):
    for h in SMALL[:4]:
        prod, _ = cartesian_product(g, h)
        rep = universal_line_product_criterion(g, h)
        assert rep.observed == _universal_line_by_definition(prod)
        assert rep.agree


@given(st.sampled_from(SMALL), st.sampled_from(SMALL))
@settings(max_examples=40, deadline=None)
def test_layer_maximality_against_oracle(g, h):
    prod, idx = cartesian_product(g, h)
    oracle_g, oracle_p = PathOracle(g), PathOracle(prod)
    for s in oracle_g.maximal_gp_sets():
        rep = layer_embed_check(g, h, s, 0)
        image = {idx.encode(v, 0) for v in s}
        assert rep.terminal == oracle_g.is_terminal_set(s)
        assert rep.product_maximal == oracle_p.is_maximal_gp(image)
        assert rep.agree


def test_layer_check_preconditions():
    c5, k2 = fam("cycle", 5), fam("complete", 2)
    with pytest.raises(ContractError):
        layer_embed_check(c5, k2, [0, 1], 0)
    with pytest.raises(ParameterError):
        layer_embed_check(c5, k2, [0, 1, 3], 5)


def test_layer_check_reports_extender():
    # {0, 3} is maximal in C6 but 1 is not terminal, so the layer extends.
    rep = layer_embed_check(fam("cycle", 6), fam("complete", 2), [0, 3], 0)
    assert rep.terminal is False and rep.product_maximal is False and rep.extender is not None


@pytest.mark.parametrize("orders,value", [([2, 3], 2), ([3, 3], 3), ([3, 4], 3)])
def test_clique_products(orders, value):
    rep = clique_product_witness(orders)
    assert rep.exact == value and rep.consistent
    assert rep.method == "exact search"


def test_three_clique_layer_is_maximal():
    rep = clique_product_witness([3, 4, 5])
    assert rep.consistent and len(rep.witnesses["clique-layer"]) == 3


def test_clique_parameters():
    with pytest.raises(ParameterError):
        clique_product_witness([1, 3])


def test_multipartite_k333_square():
    rep = multipartite_product_witness([3, 3, 3], [3, 3, 3])
    assert rep.exact == 3 and rep.consistent
    assert rep.method.startswith("no maximal set of size <= 2")
    diag = rep.witnesses["diagonal"]
    prod, _ = cartesian_product(fam("multipartite", 3, 3, 3), fam("multipartite", 3, 3, 3))
    oracle = PathOracle(prod)
    assert oracle.is_maximal_gp({a * 9 + b for a, b in diag})


def test_multipartite_small_product_exact():
    rep = multipartite_product_witness([2, 2], [3, 3, 3])
    prod, _ = cartesian_product(fam("multipartite", 2, 2), fam("multipartite", 3, 3, 3))
    from genpos.position import lower_gp_number

    assert rep.exact == lower_gp_number(prod).count == 2


def test_multipartite_parameters():
    with pytest.raises(ParameterError):
        multipartite_product_witness([3], [3, 3])
    with pytest.raises(ParameterError):
        multipartite_product_witness([1, 1], [3, 3])


def test_six_pairs_witness_is_maximal():
    rep = multipartite_product_witness([8, 8], [9, 8], refute_limit=0)
    assert rep.checks["six-pairs maximal"]
    assert len(rep.witnesses["six-pairs"]) == 8


def test_orthogonal_layers_agree():
    c6 = fam("cycle", 6)
    gp_sets = [s for s in PathOracle(c6).gp_sets() if len(s) <= 3]
    for s1 in gp_sets[:12]:
        for s2 in gp_sets[:12]:
            assert orthogonal_layers(c6, 2, [s1, s2]).agree
    with pytest.raises(ParameterError):
        orthogonal_layers(c6, 1, [[0]])


def test_pair_scan_small():
    res = scan_pairs_conjecture(3)
    assert res.checked == 9 and res.ok and not res.inconclusive


def test_pair_scan_order_limit():
    with pytest.raises(ParameterError):
        scan_pairs_conjecture(6)


def test_clique_cutset_and_profile(petersen):
    assert has_clique_cutset(fam("path", 4)) is not None
    assert has_clique_cutset(fam("cycle", 5)) is None
    profile = minimal_counterexample_profile(petersen)
    assert profile == {"connected": True, "no_simplicial": True, "no_clique_cutset": True, "twin_free": True}


def test_maximal_sets_of_factor_feed_layer_check():
    g, h = fam("cycle", 5), fam("path", 3)
    reps = [layer_embed_check(g, h, s) for s in iter_maximal_gp_sets(DistanceMatrix(g))]
    assert reps and all(r.agree for r in reps)
