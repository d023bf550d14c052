"""Simple undirected graphs on vertices 0..n-1, stored as adjacency bitsets.

Also: BFS metrics, vertex connectivity, family recognition and builders,
the graph6 codec, an edge-list codec and isomorph-free enumeration of small
connected graphs.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

INF = math.inf


class DisconnectedGraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency has wrong length")
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
            if row >> self.n:
                raise ValueError(f"row {v} references a vertex >= n")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if v > u]

    def max_degree(self) -> int:
        return max(self.degree(v) for v in range(self.n))

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        return bfs_distances(self, 0).count(INF) == 0

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return build_graph(len(vertices), edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 1:
        raise ValueError("graph needs at least one vertex")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise ValueError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------- distances

class DistanceMatrix:
    """Hop distances; unreachable pairs hold INF."""

    def __init__(self, rows: Sequence[Sequence[float]]):
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)

    def __getitem__(self, pair: tuple[int, int]):
        u, v = pair
        return self.rows[u][v]

    def eccentricity(self, v: int):
        return max(self.rows[v])

    def layers(self, v: int) -> list[list[int]]:
        """Vertices grouped by distance from v (finite distances only)."""
        ecc = max(d for d in self.rows[v] if d != INF)
        out = [[] for _ in range(int(ecc) + 1)]
        for u, d in enumerate(self.rows[v]):
            if d != INF:
                out[int(d)].append(u)
        return out


def bfs_distances(g: Graph, source: int) -> list:
    dist = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in _bits(g.adj[x]):
            if dist[y] == INF:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix([bfs_distances(g, v) for v in range(g.n)])


def diameter(g: Graph) -> int:
    best = 0
    for v in range(g.n):
        d = max(bfs_distances(g, v))
        if d == INF:
            raise DisconnectedGraphError("diameter of a disconnected graph")
        best = max(best, d)
    return best


# ------------------------------------------------------------- connectivity

def local_vertex_connectivity(g: Graph, s: int, t: int, removed: int = 0) -> int:
    """Maximum number of internally disjoint s-t paths avoiding `removed`.

    Unit-capacity max flow on the vertex-split digraph: vertex x becomes
    x_in -> x_out with capacity 1 (infinite for s and t), each edge xy
    becomes x_out -> y_in and y_out -> x_in. Requires s, t non-adjacent.
    """
    if g.has_edge(s, t):
        raise ValueError("local connectivity is defined here for non-adjacent pairs")
    n = g.n
    # node ids: x_in = 2x, x_out = 2x + 1
    cap: dict[tuple[int, int], int] = {}
    out_arcs: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a, b, c):
        if (a, b) not in cap:
            out_arcs[a].append(b)
            out_arcs[b].append(a)
            cap[(a, b)] = 0
            cap.setdefault((b, a), 0)
        cap[(a, b)] += c

    big = n + 1
    for x in range(n):
        if removed >> x & 1:
            continue
        arc(2 * x, 2 * x + 1, big if x in (s, t) else 1)
        for y in _bits(g.adj[x]):
            if not removed >> y & 1:
                arc(2 * x + 1, 2 * y, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out_arcs[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """kappa(G), with kappa(K_n) = n - 1 and 0 for disconnected graphs."""
    if g.n < 2:
        return 0
    if not g.is_connected():
        return 0
    if g.is_complete():
        return g.n - 1
    best = g.n - 1
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if not g.has_edge(s, t):
                best = min(best, local_vertex_connectivity(g, s, t))
    return best


# ----------------------------------------------------------------- families

@dataclass(frozen=True)
class FamilyDescriptor:
    tag: str
    params: tuple[int, ...] = ()

    PATH = "Path"
    CYCLE = "Cycle"
    COMPLETE = "Complete"
    BIPARTITE = "CompleteBipartite"
    MULTIPARTITE = "CompleteMultipartite"
    WHEEL = "Wheel"
    OTHER = "Other"

    @property
    def parts(self) -> tuple[int, ...]:
        if self.tag in (self.BIPARTITE, self.MULTIPARTITE):
            return self.params
        if self.tag == self.COMPLETE:
            return (1,) * self.params[0]
        raise AttributeError(f"{self.tag} has no parts")

    @property
    def m(self) -> int:
        """Sum of all parts but the largest; the connectivity of the multipartite graph."""
        return sum(self.parts[:-1])

    @property
    def order(self) -> int:
        if self.tag == self.WHEEL:
            return self.params[0] + 1
        if self.tag in (self.BIPARTITE, self.MULTIPARTITE):
            return sum(self.params)
        return self.params[0]

    def __str__(self):
        if self.tag == self.OTHER:
            return "Other"
        return f"{self.tag}({','.join(map(str, self.params))})"


def Path(n: int) -> FamilyDescriptor:
    return FamilyDescriptor(FamilyDescriptor.PATH, (n,))


def Cycle(n: int) -> FamilyDescriptor:
    return FamilyDescriptor(FamilyDescriptor.CYCLE, (n,))


def Complete(n: int) -> FamilyDescriptor:
    return FamilyDescriptor(FamilyDescriptor.COMPLETE, (n,))


def Wheel(n: int) -> FamilyDescriptor:
    return FamilyDescriptor(FamilyDescriptor.WHEEL, (n,))


def CompleteBipartite(n1: int, n2: int) -> FamilyDescriptor:
    return FamilyDescriptor(FamilyDescriptor.BIPARTITE, tuple(sorted((n1, n2))))


def CompleteMultipartite(*parts: int) -> FamilyDescriptor:
    return FamilyDescriptor(FamilyDescriptor.MULTIPARTITE, tuple(sorted(parts)))


def _multipartite_parts(g: Graph) -> Optional[tuple[int, ...]]:
    # complete multipartite <=> complement is a disjoint union of cliques
    comp = g.complement()
    seen = 0
    parts = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        block = comp.adj[v] | (1 << v)
        for u in _bits(block):
            if comp.adj[u] | (1 << u) != block:
                return None
        seen |= block
        parts.append(block.bit_count())
    return tuple(sorted(parts))


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.is_connected() and all(g.degree(v) == 2 for v in range(g.n))


def recognize_family(g: Graph) -> FamilyDescriptor:
    """Family tag of a connected graph.

    Precedence for graphs in several families:
    Complete > Path > CompleteBipartite > Cycle > Wheel > CompleteMultipartite.
    """
    n = g.n
    if g.is_complete():
        return Complete(n)
    if g.m == n - 1 and g.max_degree() <= 2 and g.is_connected():
        return Path(n)
    parts = _multipartite_parts(g)
    if parts is not None and len(parts) == 2:
        return CompleteBipartite(*parts)
    if _is_cycle(g):
        return Cycle(n)
    if n >= 4:
        for hub in range(n):
            if g.degree(hub) == n - 1:
                rest = [v for v in range(n) if v != hub]
                if _is_cycle(g.induced(rest)):
                    return Wheel(n - 1)
    if parts is not None and len(parts) >= 3:
        return CompleteMultipartite(*parts)
    return FamilyDescriptor(FamilyDescriptor.OTHER)


def make_family(d: FamilyDescriptor) -> Graph:
    """Canonically labeled instance of a family.

    Paths and cycles run 0-1-...-(n-1); the wheel hub is vertex n after the
    cycle 0..n-1; multipartite parts occupy consecutive id blocks in
    ascending part size.
    """
    tag, p = d.tag, d.params
    if tag == FamilyDescriptor.PATH:
        (n,) = p
        if n < 1:
            raise ValueError("Path needs n >= 1")
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    if tag == FamilyDescriptor.CYCLE:
        (n,) = p
        if n < 3:
            raise ValueError("Cycle needs n >= 3")
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if tag == FamilyDescriptor.COMPLETE:
        (n,) = p
        if n < 1:
            raise ValueError("Complete needs n >= 1")
        return build_graph(n, itertools.combinations(range(n), 2))
    if tag == FamilyDescriptor.WHEEL:
        (n,) = p
        if n < 3:
            raise ValueError("Wheel needs n >= 3")
        edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
        return build_graph(n + 1, edges)
    if tag in (FamilyDescriptor.BIPARTITE, FamilyDescriptor.MULTIPARTITE):
        parts = sorted(p)
        if not parts or min(parts) < 1:
            raise ValueError(f"invalid parts {p}")
        if tag == FamilyDescriptor.BIPARTITE and len(parts) != 2:
            raise ValueError("CompleteBipartite takes exactly two parts")
        if tag == FamilyDescriptor.MULTIPARTITE and len(parts) < 3:
            raise ValueError("CompleteMultipartite takes at least three parts")
        block = []
        for i, size in enumerate(parts):
            block += [i] * size
        n = len(block)
        return build_graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2)
                               if block[u] != block[v]])
    raise ValueError(f"cannot build family {d}")


def corona_complete(a: int) -> Graph:
    """K_a on 0..a-1 with pendant a+i hanging off clique vertex i."""
    if a < 1:
        raise ValueError("corona needs a >= 1")
    edges = list(itertools.combinations(range(a), 2)) + [(i, a + i) for i in range(a)]
    return build_graph(2 * a, edges)


# ------------------------------------------------------------------- codecs

def _pairs(n: int) -> Iterator[tuple[int, int]]:
    # graph6 column order: (0,1),(0,2),(1,2),(0,3),...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= x <= 63 for x in data):
        raise ValueError(f"invalid graph6 character in {s!r}")
    n = data[0]
    if n == 63:
        raise ValueError("graph6 with multi-byte size header is not supported (n > 62)")
    if n < 1:
        raise ValueError("graph6 graph must have at least one vertex")
    nbits = n * (n - 1) // 2
    if len(data) - 1 != (nbits + 5) // 6:
        raise ValueError(f"graph6 length mismatch for n={n}: {s!r}")
    bits = []
    for x in data[1:]:
        bits.extend((x >> (5 - i)) & 1 for i in range(6))
    if any(bits[nbits:]):
        raise ValueError(f"stray padding bits in {s!r}")
    edges = [pair for pair, b in zip(_pairs(n), bits) if b]
    return build_graph(n, edges)


def encode_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 encoding limited to n <= 62")
    bits = [int(g.has_edge(i, j)) for i, j in _pairs(g.n)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = x << 1 | b
        chars.append(chr(x + 63))
    return "".join(chars)


def parse_edge_list(text: str) -> Graph:
    """'n m' then m lines 'u v'. Semicolons may stand in for newlines."""
    tokens = text.replace(";", "\n").split()
    if len(tokens) < 2:
        raise ValueError("edge list needs an 'n m' header")
    n, m = int(tokens[0]), int(tokens[1])
    rest = tokens[2:]
    if len(rest) != 2 * m:
        raise ValueError(f"edge list header says {m} edges, found {len(rest) / 2:g}")
    edges = [(int(rest[2 * i]), int(rest[2 * i + 1])) for i in range(m)]
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Accept either a graph6 line or an edge list (first token decides)."""
    s = text.strip()
    if s[:1].isdigit():
        return parse_edge_list(s)
    return parse_graph6(s.splitlines()[0])


# -------------------------------------------------------------- enumeration

@lru_cache(maxsize=None)
def _perm_table(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)


def canonical_code(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Least adjacency bitstring over all vertex permutations.

    The bitstring lists the pairs in graph6 order; it is read as an integer
    with the first pair most significant, so the least integer is the
    lexicographically least string. Returns (code, perm) where perm maps
    old vertex ids to canonical ids.
    """
    n = g.n
    if n == 1:
        return 0, (0,)
    A = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges():
        A[u, v] = A[v, u] = 1
    perms = _perm_table(n)                      # perms[r][new] = old
    pairs = list(_pairs(n))
    I = np.array([i for i, _ in pairs])
    J = np.array([j for _, j in pairs])
    bits = A[perms[:, I], perms[:, J]]          # (n!, npairs)
    weights = np.array([1 << (len(pairs) - 1 - k) for k in range(len(pairs))], dtype=object)
    codes = bits.astype(object) @ weights if len(pairs) > 62 else bits @ weights.astype(np.int64)
    r = int(np.argmin(codes))
    old_of_new = perms[r]
    perm = [0] * n
    for new, old in enumerate(old_of_new):
        perm[int(old)] = new
    return int(codes[r]), tuple(perm)


def canonical_form(g: Graph) -> Graph:
    _, perm = canonical_code(g)
    return g.relabel(perm)


def canonical_graph6(g: Graph) -> str:
    return encode_graph6(canonical_form(g))


MAX_ENUM_ORDER = 6


@lru_cache(maxsize=None)
def _connected_codes(n: int) -> tuple[tuple[int, str], ...]:
    if n == 1:
        return ((0, encode_graph6(build_graph(1, []))),)
    found: dict[int, str] = {}
    # every connected graph has a non-cut vertex, so growing connected
    # graphs of order n-1 by one vertex reaches every class
    for _, g6 in _connected_codes(n - 1):
        base = parse_graph6(g6)
        for nbhd in range(1, 1 << (n - 1)):
            g = build_graph(n, base.edges() + [(u, n - 1) for u in _bits(nbhd)])
            code, perm = canonical_code(g)
            if code not in found:
                found[code] = encode_graph6(g.relabel(perm))
    return tuple(sorted(found.items(), key=lambda kv: (parse_graph6(kv[1]).m, kv[0])))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, ordered by edge
    count then canonical code."""
    if not 3 <= n <= MAX_ENUM_ORDER:
        raise ValueError(f"built-in enumeration supports 3 <= n <= {MAX_ENUM_ORDER}, got {n}")
    for _, g6 in _connected_codes(n):
        yield parse_graph6(g6)


def read_graph6_file(path) -> Iterator[Graph]:
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                yield parse_graph6(line)
