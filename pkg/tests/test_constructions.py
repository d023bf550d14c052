import random

import networkx as nx
import pytest
from hypothesis import given, settings

from pvconn.coloring import (
    VertexColoring,
    is_proper_vertex_k_connected,
    is_strong_proper_vertex_connected,
)
from pvconn.constructions import (
    Certificate,
    ConstructionOutput,
    bfs_parity_coloring,
    lemma3_coloring,
    optimal_family_coloring,
    thm8_construction,
    corona_with_tail,
    thm9_construction,
    clique_with_pendants,
)
from pvconn.graph import (
    Complete,
    Cycle,
    DisconnectedGraphError,
    Path,
    Wheel,
    build_graph,
    make_family,
)
from pvconn.formulas import pvc_k_cycle, pvc_k_wheel
from pvconn.solvers import chromatic_number_exact, spvc_exact, srvc_exact

from strategies import connected_graphs, random_connected, to_nx


@settings(max_examples=150, deadline=None)
@given(connected_graphs(min_n=2, max_n=10))
def test_bfs_parity_always_passes(g):
    c = bfs_parity_coloring(g)
    assert c.palette == 2
    assert is_proper_vertex_k_connected(g, c, 1)


def test_bfs_parity_errors():
    with pytest.raises(DisconnectedGraphError):
        bfs_parity_coloring(build_graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(ValueError):
        bfs_parity_coloring(build_graph(1, []))


def degree_gap(g):
    return g.n - 1 - g.max_degree()


def test_sparse_palette_coloring_random_graphs():
    rng = random.Random(3)
    seen_cases = set()
    for i in range(120):
        n = 7 + i % 2
        g = random_connected(n, rng, p=rng.choice([0.2, 0.5, 0.8, 0.95]))
        c = lemma3_coloring(g)
        seen_cases.add(min(degree_gap(g), 3))
        assert c.palette < n - 3
        assert is_strong_proper_vertex_connected(g, c)
    assert seen_cases == {0, 1, 2, 3}


def test_sparse_palette_shared_and_unshared_neighbours():
    # vertex 0 has degree n-3; its two non-neighbours share neighbour 1
    shared = build_graph(7, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (2, 3)])
    # non-neighbours 5 and 6 hang from different vertices
    split = build_graph(7, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 6), (3, 4)])
    for g in (shared, split):
        assert g.max_degree() == g.n - 3
        c = lemma3_coloring(g)
        assert c.palette < g.n - 3 and is_strong_proper_vertex_connected(g, c)
    assert lemma3_coloring(shared).palette == 2
    assert lemma3_coloring(split).palette == 3


def test_sparse_palette_rejects_small():
    with pytest.raises(ValueError):
        lemma3_coloring(make_family(Path(6)))


@pytest.mark.parametrize("n", range(3, 10))
def test_optimal_cycle_colorings(n):
    g = make_family(Cycle(n))
    for k in (1, 2):
        c = optimal_family_coloring(Cycle(n), k)
        assert c.palette == pvc_k_cycle(n, k).value
        assert is_proper_vertex_k_connected(g, c, k, max_n=9)


@pytest.mark.parametrize("n", range(3, 8))
def test_optimal_wheel_colorings(n):
    g = make_family(Wheel(n))
    for k in (1, 2, 3):
        c = optimal_family_coloring(Wheel(n), k)
        assert c.palette == pvc_k_wheel(n, k).value
        assert is_proper_vertex_k_connected(g, c, k)


def test_optimal_family_rejects():
    with pytest.raises(ValueError):
        optimal_family_coloring(Cycle(5), 3)
    with pytest.raises(ValueError):
        optimal_family_coloring(Complete(4), 1)


def test_corona_with_tail_shape():
    g = corona_with_tail(3, 5)
    assert g.n == 8 and g.is_connected()
    # corona plus a two-vertex tail hung from the last pendant
    assert g.has_edge(5, 6) and g.has_edge(6, 7)
    assert sorted(g.degree(v) for v in range(g.n)) == [1, 1, 1, 2, 2, 3, 3, 3]
    assert nx.is_isomorphic(to_nx(corona_with_tail(2, 2)), to_nx(make_family(Path(4))))
    with pytest.raises(ValueError):
        corona_with_tail(3, 2)
    with pytest.raises(ValueError):
        corona_with_tail(1, 3)


@pytest.mark.parametrize("a, b", [(a, b) for a in range(2, 5) for b in range(a, 9 - a)])
def test_spvc_srvc_realization(a, b):
    out = thm8_construction(a, b)
    assert out.graph.n == a + b
    assert all(out.verify().values())
    assert spvc_exact(out.graph).value == a
    assert srvc_exact(out.graph).value == b


def test_clique_with_pendants_shape():
    g = clique_with_pendants(2, 3, 4)
    assert g.max_degree() == 4
    assert g.n == 3 + 2 + 1
    with pytest.raises(ValueError):
        clique_with_pendants(3, 2, 4)


@pytest.mark.parametrize("a, b, c", [(a, b, c) for a in range(2, 5) for b in range(a, 6) for c in range(b, 8)
                                     if c + a <= 9])
def test_spvc_chi_degree_realization(a, b, c):
    out = thm9_construction(a, b, c)
    assert out.graph.max_degree() == c
    assert all(out.verify().values())
    assert spvc_exact(out.graph).value == a
    assert chromatic_number_exact(out.graph).value == b


def test_certificate_check_catches_wrong_palette():
    g = make_family(Cycle(4))
    mono = VertexColoring((1, 1, 1, 1), 1)
    out = ConstructionOutput(g, [Certificate("good", mono, "strong-proper", 1),
                                 Certificate("claim", mono, "strong-proper", 2),
                                 Certificate("proper", mono, "proper", 1)])
    assert out.verify() == {"good": True, "claim": False, "proper": False}
