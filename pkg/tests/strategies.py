import itertools
import random

import networkx as nx
from hypothesis import strategies as st

from pvconn.graph import Graph, build_graph


def random_connected(n: int, rng: random.Random, p: float = None) -> Graph:
    while True:
        q = rng.uniform(0.2, 0.8) if p is None else p
        g = build_graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < q])
        if g.is_connected():
            return g


@st.composite
def connected_graphs(draw, min_n=2, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    # random spanning tree keeps it connected, extra edges on top
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    edges = {(parent, v) for v, parent in zip(range(1, n), parents)}
    extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    return build_graph(n, edges | set(extra))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
