import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pvconn.coloring import (
    EdgeColoring,
    GuardError,
    NotKConnectedError,
    Verdict,
    VertexColoring,
    find_k_disjoint_proper_edge_paths,
    find_k_disjoint_vertex_proper_paths,
    format_certificate,
    has_vertex_proper_geodesic,
    has_vertex_rainbow_geodesic,
    is_proper_coloring,
    is_proper_k_connected_edges,
    is_proper_vertex_k_connected,
    is_strong_proper_vertex_connected,
    is_strong_rainbow_vertex_connected,
    is_vertex_proper_path,
    is_vertex_rainbow_path,
    parse_certificate,
)
from pvconn.graph import (
    Complete,
    CompleteBipartite,
    Cycle,
    Path,
    Wheel,
    make_family,
    parse_graph6,
    vertex_connectivity,
)

from strategies import connected_graphs, random_connected, to_nx


def vc(*colors):
    return VertexColoring.from_colors(colors)


# ------------------------------------------------------------- predicates

def test_path_predicates():
    g = make_family(Path(5))
    assert is_vertex_proper_path(g, vc(1, 1, 2, 1, 1), [0, 1, 2, 3, 4])
    assert not is_vertex_proper_path(g, vc(1, 1, 1, 2, 2), [0, 1, 2, 3, 4])
    # endpoints are free
    assert is_vertex_proper_path(g, vc(2, 2, 1, 2, 2), [0, 1, 2, 3, 4])
    assert not is_vertex_rainbow_path(g, vc(1, 1, 2, 1, 1), [0, 1, 2, 3, 4])
    assert is_vertex_rainbow_path(g, vc(1, 1, 2, 3, 1), [0, 1, 2, 3, 4])
    assert is_vertex_proper_path(g, VertexColoring.empty(), [1, 2])
    assert not is_vertex_proper_path(g, VertexColoring.empty(), [1, 2, 3])


def test_path_predicate_rejects_non_paths():
    g = make_family(Path(4))
    with pytest.raises(ValueError):
        is_vertex_proper_path(g, vc(1, 2, 1, 2), [0, 2])
    with pytest.raises(ValueError):
        is_vertex_proper_path(g, vc(1, 2, 1, 2), [0, 1, 0, 1])


def test_coloring_validation():
    with pytest.raises(ValueError):
        VertexColoring((1, 3), 2)
    with pytest.raises(ValueError):
        VertexColoring((1,), 0)
    with pytest.raises(ValueError):
        is_strong_proper_vertex_connected(make_family(Path(4)), vc(1, 2))


def test_proper_coloring():
    c5 = make_family(Cycle(5))
    assert is_proper_coloring(c5, vc(1, 2, 1, 2, 3))
    assert not is_proper_coloring(c5, vc(1, 2, 1, 2, 1))
    assert not is_proper_coloring(c5, VertexColoring.empty())


def test_verdict_consistency():
    with pytest.raises(ValueError):
        Verdict(True, failing_pair=(0, 1))
    with pytest.raises(ValueError):
        Verdict(False)


# ---------------------------------------------------------------- examples

def test_p4_strong_proper_fails_under_canonical_labels():
    g = parse_graph6("CL")  # P_4 as 0-3-2-1
    v = is_strong_proper_vertex_connected(g, vc(1, 1, 2, 2))
    assert not v and v.failing_pair == (0, 1)


def test_p4_path_order_passes():
    g = make_family(Path(4))
    assert is_strong_proper_vertex_connected(g, vc(1, 1, 2, 2))
    assert not is_strong_proper_vertex_connected(g, vc(1, 1, 1, 1))


def test_c6_examples():
    g = make_family(Cycle(6))
    assert is_proper_vertex_k_connected(g, vc(1, 2, 1, 2, 1, 2), 2)
    assert not is_proper_vertex_k_connected(g, vc(1, 1, 1, 1, 1, 1), 1)


def test_palette_zero_only_complete():
    assert is_proper_vertex_k_connected(make_family(Complete(4)), VertexColoring.empty())
    assert is_strong_proper_vertex_connected(make_family(Complete(4)), VertexColoring.empty())
    assert not is_proper_vertex_k_connected(make_family(Cycle(4)), VertexColoring.empty())
    assert not is_strong_rainbow_vertex_connected(make_family(Cycle(4)), VertexColoring.empty())


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_complete_monochromatic_full_connectivity(n):
    g = make_family(Complete(n))
    assert is_proper_vertex_k_connected(g, vc(*[1] * n), n - 1)


def test_witnesses_are_valid():
    g = make_family(Wheel(5))
    c = vc(1, 2, 1, 2, 3, 1)
    v = is_proper_vertex_k_connected(g, c, 2)
    assert v
    for (a, b), paths in v.witness.items():
        assert len(paths) == 2
        for p in paths:
            assert p[0] == a and p[-1] == b and is_vertex_proper_path(g, c, p)
        assert not set(paths[0][1:-1]) & set(paths[1][1:-1])


# --------------------------------------------------------- geodesic oracle

def exhaustive_geodesic(g, c, u, v, rainbow=False):
    test = is_vertex_rainbow_path if rainbow else is_vertex_proper_path
    return any(test(g, c, p) for p in nx.all_shortest_paths(to_nx(g), u, v))


def random_pairs(count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(3, 7)
        g = random_connected(n, rng)
        p = rng.randint(1, 4)
        c = VertexColoring(tuple(rng.randint(1, p) for _ in range(n)), p)
        yield g, c


def test_geodesic_dp_matches_exhaustive():
    for g, c in random_pairs(200, seed=7):
        for u, v in itertools.combinations(range(g.n), 2):
            w = has_vertex_proper_geodesic(g, c, u, v)
            assert (w is not None) == exhaustive_geodesic(g, c, u, v)
            if w is not None:
                assert len(w) - 1 == nx.shortest_path_length(to_nx(g), u, v)
                assert is_vertex_proper_path(g, c, w)


def test_rainbow_geodesic_matches_exhaustive():
    for g, c in random_pairs(200, seed=11):
        for u, v in itertools.combinations(range(g.n), 2):
            w = has_vertex_rainbow_geodesic(g, c, u, v)
            assert (w is not None) == exhaustive_geodesic(g, c, u, v, rainbow=True)
            if w is not None:
                assert is_vertex_rainbow_path(g, c, w)


def colorings(n):
    return st.integers(1, 4).flatmap(
        lambda p: st.lists(st.integers(1, p), min_size=n, max_size=n).map(lambda cs: VertexColoring(tuple(cs), p)))


@st.composite
def graph_with_coloring(draw, max_n=7):
    g = draw(connected_graphs(min_n=2, max_n=max_n))
    return g, draw(colorings(g.n))


@settings(max_examples=150, deadline=None)
@given(graph_with_coloring())
def test_rainbow_implies_proper(gc):
    g, c = gc
    if is_strong_rainbow_vertex_connected(g, c):
        assert is_strong_proper_vertex_connected(g, c)
    if is_strong_proper_vertex_connected(g, c):
        assert is_proper_vertex_k_connected(g, c, 1)


@settings(max_examples=150, deadline=None)
@given(connected_graphs(min_n=2, max_n=7), st.data())
def test_proper_coloring_is_strong_proper(g, data):
    # greedy proper coloring in a random order
    order = data.draw(st.permutations(range(g.n)))
    col = [0] * g.n
    for x in order:
        taken = {col[y] for y in g.neighbors(x)}
        col[x] = next(c for c in itertools.count(1) if c not in taken)
    c = VertexColoring.from_colors(col)
    assert is_proper_coloring(g, c)
    assert is_strong_proper_vertex_connected(g, c)


@settings(max_examples=100, deadline=None)
@given(graph_with_coloring(max_n=6), st.data())
def test_refining_a_coloring_keeps_verdicts(gc, data):
    """Splitting a color class can only help proper and rainbow checks."""
    g, c = gc
    x = data.draw(st.integers(0, g.n - 1))
    cols = list(c.colors)
    cols[x] = c.palette + 1
    finer = VertexColoring(tuple(cols), c.palette + 1)
    if is_strong_proper_vertex_connected(g, c):
        assert is_strong_proper_vertex_connected(g, finer)
    if is_strong_rainbow_vertex_connected(g, c):
        assert is_strong_rainbow_vertex_connected(g, finer)
    if is_proper_vertex_k_connected(g, c):
        assert is_proper_vertex_k_connected(g, finer)


# ----------------------------------------------------- disjoint-path oracle

def brute_force_k_disjoint(g, u, v, k, ok):
    paths = [tuple(p) for p in nx.all_simple_paths(to_nx(g), u, v) if ok(p)]
    for combo in itertools.combinations(paths, k):
        inner = [set(p[1:-1]) for p in combo]
        if sum(map(len, inner)) == len(set().union(*inner)) and sum(len(p) == 2 for p in combo) <= 1:
            return True
    return False


def test_k_disjoint_vertex_matches_brute_force():
    rng = random.Random(99)
    checked = 0
    while checked < 120:
        n = rng.randint(4, 7)
        g = random_connected(n, rng, p=rng.choice([0.4, 0.6, 0.8]))
        kappa = vertex_connectivity(g)
        if kappa < 1:
            continue
        p = rng.randint(1, 3)
        c = VertexColoring(tuple(rng.randint(1, p) for _ in range(n)), p)
        k = rng.randint(1, min(kappa, 3))
        u, v = rng.sample(range(n), 2)
        found = find_k_disjoint_vertex_proper_paths(g, c, u, v, k)
        expected = brute_force_k_disjoint(g, u, v, k, lambda q: is_vertex_proper_path(g, c, q))
        assert (found is not None) == expected
        if found:
            assert len(found) == k
            for q in found:
                assert q[0] == u and q[-1] == v and is_vertex_proper_path(g, c, q)
            inner = [x for q in found for x in q[1:-1]]
            assert len(inner) == len(set(inner))
        checked += 1


def proper_edge_path(g, ec, p):
    return all(ec[(p[i - 1], p[i])] != ec[(p[i], p[i + 1])] for i in range(1, len(p) - 1))


def test_k_disjoint_edge_matches_brute_force():
    rng = random.Random(5)
    checked = 0
    while checked < 80:
        n = rng.randint(4, 6)
        g = random_connected(n, rng, p=0.6)
        kappa = vertex_connectivity(g)
        if g.m > 12:
            continue
        ec = EdgeColoring.from_sequence(g, [rng.randint(1, 2) for _ in range(g.m)])
        if ec.palette < 2:
            continue
        k = rng.randint(1, min(kappa, 2))
        u, v = rng.sample(range(n), 2)
        found = find_k_disjoint_proper_edge_paths(g, ec, u, v, k)
        assert (found is not None) == brute_force_k_disjoint(g, u, v, k, lambda q: proper_edge_path(g, ec, q))
        if found:
            assert all(proper_edge_path(g, ec, q) for q in found)
        checked += 1


def test_k33_two_edge_colorings_need_three_colors():
    g = make_family(CompleteBipartite(3, 2))
    assert all(not is_proper_k_connected_edges(g, EdgeColoring.from_sequence(g, cols), 2)
               for cols in itertools.product((1, 2), repeat=g.m) if set(cols) == {1, 2})


def test_edge_example_c4():
    g = make_family(Cycle(4))
    assert is_proper_k_connected_edges(g, EdgeColoring.from_sequence(g, [1, 2, 2, 1]), 1)


def test_k_above_connectivity_rejected():
    with pytest.raises(NotKConnectedError):
        is_proper_vertex_k_connected(make_family(Cycle(5)), vc(1, 2, 1, 2, 3), 3)
    with pytest.raises(NotKConnectedError):
        find_k_disjoint_vertex_proper_paths(make_family(Path(4)), vc(1, 1, 1, 1), 0, 3, 2)


def test_guard():
    g = make_family(Complete(9))
    c = vc(*[1] * 9)
    with pytest.raises(GuardError, match="--max-n"):
        is_proper_vertex_k_connected(g, c, 3)
    assert is_proper_vertex_k_connected(g, c, 3, max_n=9)


# ------------------------------------------------------------ certificates

def test_certificate_roundtrip_vertex():
    c = vc(1, 2, 3, 1)
    text = format_certificate(c)
    assert text.splitlines()[0] == "vertex-coloring palette=3"
    assert parse_certificate(text) == c
    assert parse_certificate(text.replace("\n", "; ").replace(";", "")) == c


def test_certificate_roundtrip_edge():
    g = make_family(Cycle(4))
    ec = EdgeColoring.from_sequence(g, [1, 2, 2, 1])
    back = parse_certificate(format_certificate(ec, g))
    assert back.assignment == ec.assignment and back.palette == 2


@pytest.mark.parametrize("bad", ["", "vertex-coloring", "vertex-coloring palette=2 0:1 2:1",
                                 "vertex-coloring palette=1 0:2", "bogus palette=1 0:1"])
def test_certificate_rejects(bad):
    with pytest.raises(ValueError):
        parse_certificate(bad)
