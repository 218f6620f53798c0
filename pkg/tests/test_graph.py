from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genpos.codecs import encode_graph6, format_edge_list, parse_edge_list, parse_graph6, read_graph6_lines
from genpos.corpus import connected_graphs
from genpos.distance import UNREACHABLE, DistanceMatrix
from genpos.enumerate import canonical_id, enumerate_connected_graphs, enumerate_graphs
from genpos.errors import CapacityError, ContractError, ParameterError, ParseError
from genpos.families import parse_family
from genpos.graph import (
    ProductIndex,
    VertexSet,
    cartesian_product,
    from_edge_list,
    induced_subgraph,
    lift,
)
from genpos.structure import is_chordal, is_cograph, maximal_cliques, maximum_clique

from oracles import classes_by_brute_force, fam, has_induced_p4, line_by_definition, nx_distances, to_nx


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


class TestGraph:
    def test_edges_are_normalised(self):
        g = from_edge_list(3, [(1, 0), (0, 1), (2, 1)])
        assert g.edges() == [(0, 1), (1, 2)]
        assert g.m == 2

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
    def test_bad_edges_rejected(self, edges):
        with pytest.raises(ParseError):
            from_edge_list(3, edges)

    def test_components_and_connectivity(self):
        g = from_edge_list(5, [(0, 1), (3, 4)])
        assert g.components() == [0b00011, 0b00100, 0b11000]
        assert not g.is_connected()

    def test_induced_subgraph_numbering(self, paw):
        sub, old = induced_subgraph(paw, [1, 2, 3])
        assert old == [1, 2, 3]
        assert sub.edges() == [(0, 1), (1, 2)]
        assert lift(0b101, old) == (1 << 1) | (1 << 3)
        with pytest.raises(ParameterError):
            induced_subgraph(paw, [])

    def test_vertex_set_str(self):
        assert str(VertexSet.of([3, 0], 4)) == "{0, 3}"

    @given(graphs())
    def test_degrees_match_networkx(self, g):
        G = to_nx(g)
        assert [g.degree(v) for v in range(g.n)] == [G.degree(v) for v in range(g.n)]
        assert g.is_connected() == nx.is_connected(G)


class TestDistance:
    @given(graphs())
    @settings(max_examples=60)
    def test_distances_match_bfs(self, g):
        dm = DistanceMatrix(g)
        ref = nx_distances(g)
        for u in range(g.n):
            for v in range(g.n):
                if v in ref[u]:
                    assert dm.d(u, v) == ref[u][v]
                else:
                    assert dm.d(u, v) is UNREACHABLE

    @given(graphs(min_n=2, max_n=7))
    @settings(max_examples=60)
    def test_line_matches_definition(self, g):
        if not g.is_connected():
            return
        dm = DistanceMatrix(g)
        ref = nx_distances(g)
        for u, v in combinations(range(g.n), 2):
            assert set(VertexSet(dm.line(u, v), g.n)) == line_by_definition(ref, u, v)

    def test_unreachable_refuses_arithmetic(self):
        dm = DistanceMatrix(from_edge_list(2, []))
        with pytest.raises(ContractError):
            dm.d(0, 1) + 1
        with pytest.raises(ContractError):
            dm.d(0, 1) < 3
        assert dm.diameter() is UNREACHABLE

    @pytest.mark.parametrize("kind,args,diam", [("cycle", (7,), 3), ("kneser2", (5,), 2), ("path", (5,), 4)])
    def test_family_diameters(self, kind, args, diam):
        assert DistanceMatrix(fam(kind, *args)).diameter() == diam


class TestFamilies:
    def test_family_shapes(self):
        assert fam("kneser2", 5).m == 15
        assert fam("line", 4).m == 12
        assert fam("wheel", 6).degree(5) == 5
        assert fam("k-minus", 4).m == 5 and not fam("k-minus", 4).has_edge(0, 1)
        assert fam("multipartite", 2, 3).m == 6

    def test_networkx_isomorphic(self):
        assert nx.is_isomorphic(to_nx(fam("kneser2", 5)), nx.petersen_graph())
        assert nx.is_isomorphic(to_nx(fam("line", 5)), nx.line_graph(nx.complete_graph(5)))
        assert nx.is_isomorphic(to_nx(fam("wheel", 7)), nx.wheel_graph(7))

    @pytest.mark.parametrize("text", ["cycle:2", "wheel:3", "kneser2:4", "nosuch:3", "cycle:x"])
    def test_bad_specs(self, text):
        with pytest.raises((ParameterError, ParseError)):
            from genpos.families import make_family

            make_family(parse_family(text))


class TestProduct:
    def test_product_matches_networkx(self):
        g, h = fam("path", 3), fam("cycle", 4)
        prod, idx = cartesian_product(g, h)
        ref = nx.cartesian_product(to_nx(g), to_nx(h))
        mapped = {(idx.encode(*a), idx.encode(*b)) for a, b in ref.edges()}
        assert set(prod.edges()) == {tuple(sorted(e)) for e in mapped}

    @given(graphs(max_n=5), graphs(max_n=5))
    @settings(max_examples=40)
    def test_product_distance_is_sum(self, g, h):
        prod, idx = cartesian_product(g, h)
        dg, dh, dp = DistanceMatrix(g), DistanceMatrix(h), DistanceMatrix(prod)
        for a in range(prod.n):
            for b in range(prod.n):
                (g1, h1), (g2, h2) = idx.decode(a), idx.decode(b)
                if dg.same_component(g1, g2) and dh.same_component(h1, h2):
                    assert dp.d(a, b) == dg.d(g1, g2) + dh.d(h1, h2)
                else:
                    assert dp.d(a, b) is UNREACHABLE

    def test_layers(self):
        idx = ProductIndex(3, 4)
        assert idx.decode(idx.encode(2, 3)) == (2, 3)
        assert idx.embed_left([0, 2], 1) == (1 << idx.encode(0, 1)) | (1 << idx.encode(2, 1))

    def test_capacity(self):
        big = fam("path", 65)
        with pytest.raises(CapacityError):
            cartesian_product(big, big)


class TestCodecs:
    @given(graphs(max_n=12))
    def test_graph6_matches_networkx(self, g):
        text = encode_graph6(g)
        assert nx.to_graph6_bytes(to_nx(g), header=False).decode().strip() == text
        assert parse_graph6(text) == g

    def test_header_and_errors(self):
        assert parse_graph6(">>graph6<<Ch") == parse_graph6("Ch")
        for bad in ["", "C", "Chh", "B~", "C\x01"]:
            with pytest.raises(ParseError):
                parse_graph6(bad)

    @given(graphs(max_n=10))
    def test_edge_list_round_trip(self, g):
        assert parse_edge_list(format_edge_list(g)) == g

    @pytest.mark.parametrize("text", ["", "3", "3 2\n0 1\n", "3 1\n0 5\n", "2 1\n0 x\n"])
    def test_edge_list_errors(self, text):
        with pytest.raises(ParseError):
            parse_edge_list(text)

    def test_read_graph6_reports_bad_lines(self, tmp_path):
        path = tmp_path / "g.g6"
        path.write_text("Ch\nnonsense!\nBw\n")
        rows = list(read_graph6_lines(path))
        assert [type(r[2]).__name__ for r in rows] == ["Graph", "ParseError", "Graph"]


class TestEnumeration:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_counts_match_brute_force(self, n):
        assert len(list(enumerate_connected_graphs(n))) == len(classes_by_brute_force(n, True))
        assert len(list(enumerate_graphs(n))) == len(classes_by_brute_force(n, False))

    def test_order_six(self):
        assert len(list(enumerate_connected_graphs(6))) == 112
        assert len(list(enumerate_graphs(6))) == 156

    def test_classes_pairwise_non_isomorphic(self):
        gs = [to_nx(g) for g in enumerate_connected_graphs(5)]
        assert all(not nx.is_isomorphic(a, b) for a, b in combinations(gs, 2))

    def test_capacity(self):
        with pytest.raises(CapacityError):
            next(enumerate_graphs(7))

    def test_bundled_order_seven(self):
        gs = list(connected_graphs(7))
        assert len(gs) == 853
        assert all(g.n == 7 and g.is_connected() for g in gs)
        buckets = {}
        for g in gs:
            G = to_nx(g)
            buckets.setdefault(nx.weisfeiler_lehman_graph_hash(G), []).append(G)
        for group in buckets.values():
            assert all(not nx.is_isomorphic(a, b) for a, b in combinations(group, 2))

    @given(graphs(max_n=6), st.randoms())
    def test_canonical_id_is_label_invariant(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        relabelled = from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert canonical_id(relabelled) == canonical_id(g)


class TestStructure:
    @given(graphs(max_n=8))
    @settings(max_examples=80)
    def test_recognisers_match_networkx(self, g):
        assert is_chordal(g) == nx.is_chordal(to_nx(g))
        assert is_cograph(g) == (not has_induced_p4(g))

    @given(graphs(max_n=8))
    @settings(max_examples=60)
    def test_cliques_match_networkx(self, g):
        ours = {frozenset(c) for c in maximal_cliques(g)}
        ref = {frozenset(c) for c in nx.find_cliques(to_nx(g))}
        assert ours == ref
        assert bin(maximum_clique(g)).count("1") == max(len(c) for c in ref)
