"""Explicit colorings and graph builders with machine-checked certificates."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .coloring import (
    VertexColoring,
    is_proper_coloring,
    is_proper_vertex_k_connected,
    is_strong_proper_vertex_connected,
    is_strong_rainbow_vertex_connected,
)
from .graph import (
    DisconnectedGraphError,
    FamilyDescriptor,
    Graph,
    build_graph,
    corona_complete,
    make_family,
)

CHECKERS = {
    "proper-vertex-connected": lambda g, c: is_proper_vertex_k_connected(g, c, 1),
    "strong-proper": is_strong_proper_vertex_connected,
    "strong-rainbow": is_strong_rainbow_vertex_connected,
    "proper": is_proper_coloring,
}


@dataclass
class Certificate:
    name: str
    coloring: VertexColoring
    predicate: str
    claimed: int

    def check(self, g: Graph) -> bool:
        return bool(CHECKERS[self.predicate](g, self.coloring)) and self.coloring.palette == self.claimed


@dataclass
class ConstructionOutput:
    graph: Graph
    certificates: list[Certificate] = field(default_factory=list)

    def verify(self) -> dict[str, bool]:
        return {c.name: c.check(self.graph) for c in self.certificates}


def bfs_parity_coloring(g: Graph) -> VertexColoring:
    """Color by BFS-tree depth from vertex 0: odd depth 1, even depth 2.

    Tree paths alternate depth parity, so every pair is joined by a
    vertex-proper path.
    """
    if g.n < 2:
        raise ValueError("needs at least two vertices")
    depth = [-1] * g.n
    depth[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if depth[y] < 0:
                depth[y] = depth[x] + 1
                queue.append(y)
    if min(depth) < 0:
        raise DisconnectedGraphError("parity coloring needs a connected graph")
    return VertexColoring(tuple(1 if d % 2 else 2 for d in depth), 2)


def lemma3_coloring(g: Graph) -> VertexColoring:
    """Strong-proper coloring with fewer than n-3 colors for n >= 7,
    chosen by how far the maximum degree falls below n-1."""
    from .solvers import chromatic_number_exact

    n = g.n
    if n < 7:
        raise ValueError("defined for n >= 7")
    if not g.is_connected():
        raise DisconnectedGraphError("needs a connected graph")
    delta = g.max_degree()
    v = min(x for x in range(n) if g.degree(x) == delta)
    outside = [x for x in range(n) if x != v and not g.has_edge(v, x)]

    if delta == n - 1:
        return VertexColoring((1,) * n, 1)
    if delta == n - 2:
        (v1,) = outside
        near = set(g.neighbors(v1))
        return VertexColoring(tuple(1 if x in near else 2 for x in range(n)), 2)
    if delta == n - 3:
        v1, v2 = outside
        shared = sorted(set(g.neighbors(v1)) & set(g.neighbors(v2)))
        if shared:
            return VertexColoring(tuple(1 if x == shared[0] else 2 for x in range(n)), 2)
        n1, n2 = set(g.neighbors(v1)), set(g.neighbors(v2))
        return VertexColoring(tuple(1 if x in n1 else 2 if x in n2 else 3 for x in range(n)), 3)
    return chromatic_number_exact(g, max_n=max(n, 12)).certificate


def optimal_family_coloring(d: FamilyDescriptor, k: int) -> VertexColoring:
    """Coloring of a cycle or wheel (labels as in make_family) that makes it
    proper vertex k-connected with the least possible palette."""
    if d.tag == FamilyDescriptor.CYCLE:
        (n,) = d.params
        if k == 1:
            if n == 3:
                return VertexColoring.empty()
            if n <= 5:
                return VertexColoring((1,) * n, 1)
            return bfs_parity_coloring(make_family(d))
        if k == 2:
            if n == 3:
                return VertexColoring((1,) * 3, 1)
            if n % 2 == 0:
                return VertexColoring(tuple(1 + i % 2 for i in range(n)), 2)
            return VertexColoring(tuple(1 + i % 2 for i in range(n - 1)) + (3,), 3)
        raise ValueError(f"cycles are only 2-connected, got k={k}")
    if d.tag == FamilyDescriptor.WHEEL:
        (n,) = d.params
        if k == 1:
            return VertexColoring.empty() if n == 3 else VertexColoring((1,) * (n + 1), 1)
        if k in (2, 3):
            if n == 3:
                return VertexColoring((1,) * 4, 1)
            rim = optimal_family_coloring(FamilyDescriptor(FamilyDescriptor.CYCLE, (n,)), k - 1)
            return VertexColoring(rim.colors + (1,), rim.palette)
        raise ValueError(f"wheels are only 3-connected, got k={k}")
    raise ValueError(f"no explicit coloring for {d}")


def corona_with_tail(a: int, b: int) -> Graph:
    """cor(K_a) (clique 0..a-1, pendant a+i on i) with a path w_1..w_{b-a}
    on ids 2a.. hung from the last pendant."""
    if a < 2 or b < a:
        raise ValueError(f"needs 2 <= a <= b, got a={a}, b={b}")
    base = corona_complete(a)
    edges = base.edges()
    tail = list(range(2 * a, a + b))
    if tail:
        edges.append((2 * a - 1, tail[0]))
        edges += list(zip(tail, tail[1:]))
    return build_graph(a + b, edges)


def thm8_construction(a: int, b: int) -> ConstructionOutput:
    """Graph with spvc = a and srvc = b, plus a certificate for each."""
    g = corona_with_tail(a, b)
    clique = list(range(a))
    last_pendant = 2 * a - 1
    tail = list(range(2 * a, a + b))

    spvc = [1] * g.n
    for j in clique:
        spvc[j] = j + 1
    spvc[last_pendant] = 1
    for idx, w in enumerate(tail, start=1):
        spvc[w] = 1 if idx % 2 == 0 else 2

    srvc = [1] * g.n
    for j in clique:
        srvc[j] = j + 1
    if tail:
        srvc[last_pendant] = a + 1
    for idx, w in enumerate(tail[:-1], start=1):
        srvc[w] = a + 1 + idx

    return ConstructionOutput(g, [
        Certificate("spvc", VertexColoring(tuple(spvc), a), "strong-proper", a),
        Certificate("srvc", VertexColoring(tuple(srvc), b), "strong-rainbow", b),
    ])


def clique_with_pendants(a: int, b: int, c: int) -> Graph:
    """K_b on 0..b-1, c-b+1 pendants on vertex 0, one pendant on each of
    1..a-1; pendant ids follow in that order."""
    if not 2 <= a <= b <= c:
        raise ValueError(f"needs 2 <= a <= b <= c, got {a}, {b}, {c}")
    edges = list(itertools.combinations(range(b), 2))
    nxt = b
    for _ in range(c - b + 1):
        edges.append((0, nxt))
        nxt += 1
    for i in range(1, a):
        edges.append((i, nxt))
        nxt += 1
    return build_graph(nxt, edges)


def thm9_construction(a: int, b: int, c: int) -> ConstructionOutput:
    """Graph with spvc = a, chi = b and max degree c, plus certificates."""
    g = clique_with_pendants(a, b, c)
    hub_pendants = range(b, b + c - b + 1)
    other_pendants = range(b + c - b + 1, g.n)

    spvc = [1] * g.n
    for j in range(a):
        spvc[j] = j + 1

    chi = [0] * g.n
    for j in range(b):
        chi[j] = j + 1
    for i, p in zip(range(1, a), other_pendants):
        chi[p] = i
    for p in hub_pendants:
        chi[p] = 2

    return ConstructionOutput(g, [
        Certificate("spvc", VertexColoring(tuple(spvc), a), "strong-proper", a),
        Certificate("chi", VertexColoring(tuple(chi), b), "proper", b),
    ])
