"""Coloring-dependent path predicates and whole-graph connectivity verdicts.

A vertex-proper path needs consecutive *internal* vertices to differ in
color; endpoints are free. The empty coloring (palette 0) leaves every
vertex uncolored, so a path passes only if it has no internal vertex.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping, Optional, Sequence, Union

from .graph import INF, Graph, _bits, all_pairs_distances, vertex_connectivity

PathWitness = tuple[int, ...]


class GuardError(RuntimeError):
    """Instance exceeds a search guard; override with --max-n."""


class NotKConnectedError(ValueError):
    pass


# n limits for the exponential disjoint-path search, keyed by k <= 2 / k >= 3
MAX_N_SMALL_K = 12
MAX_N_LARGE_K = 8


def check_guard(n: int, k: int, max_n: Optional[int] = None) -> None:
    limit = max_n if max_n is not None else (MAX_N_SMALL_K if k <= 2 else MAX_N_LARGE_K)
    if n > limit:
        raise GuardError(f"n={n} exceeds the k={k} disjoint-path guard of {limit} (raise it with --max-n)")


@dataclass(frozen=True)
class VertexColoring:
    colors: tuple[int, ...]
    palette: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.palette < 0:
            raise ValueError("negative palette")
        if self.palette == 0 and self.colors:
            raise ValueError("palette 0 only admits the empty assignment")
        for c in self.colors:
            if not 1 <= c <= self.palette:
                raise ValueError(f"color {c} outside 1..{self.palette}")

    @classmethod
    def empty(cls) -> "VertexColoring":
        return cls((), 0)

    @classmethod
    def from_colors(cls, colors: Sequence[int]) -> "VertexColoring":
        return cls(tuple(colors), max(colors, default=0))

    def used(self) -> int:
        return len(set(self.colors))


@dataclass(frozen=True)
class EdgeColoring:
    assignment: Mapping[tuple[int, int], int] = field(hash=False)
    palette: int

    def __post_init__(self):
        norm = {(min(e), max(e)): c for e, c in self.assignment.items()}
        object.__setattr__(self, "assignment", norm)
        for c in norm.values():
            if not 1 <= c <= self.palette:
                raise ValueError(f"color {c} outside 1..{self.palette}")

    def __getitem__(self, edge: tuple[int, int]) -> int:
        u, v = edge
        return self.assignment[(u, v) if u < v else (v, u)]

    @classmethod
    def from_sequence(cls, g: Graph, colors: Sequence[int]) -> "EdgeColoring":
        """Colors listed in g.edges() order."""
        return cls(dict(zip(g.edges(), colors)), max(colors, default=0))


@dataclass
class Verdict:
    passed: bool
    witness: Optional[dict] = None
    failing_pair: Optional[tuple[int, int]] = None

    def __post_init__(self):
        if self.passed != (self.failing_pair is None):
            raise ValueError("verdict must carry a failing pair exactly when it fails")

    def __bool__(self):
        return self.passed


@lru_cache(maxsize=4096)
def _dist(g: Graph):
    return all_pairs_distances(g).rows


@lru_cache(maxsize=4096)
def _kappa(g: Graph) -> int:
    return vertex_connectivity(g)


def _check_total(g: Graph, c: VertexColoring) -> None:
    if c.colors and len(c.colors) != g.n:
        raise ValueError(f"coloring covers {len(c.colors)} vertices, graph has {g.n}")


def _check_edge_total(g: Graph, ec: EdgeColoring) -> None:
    missing = [e for e in g.edges() if e not in ec.assignment]
    if missing:
        raise ValueError(f"edge coloring misses edges {missing}")


def _check_path(g: Graph, p: Sequence[int]) -> None:
    if len(p) < 2:
        raise ValueError("a path needs two endpoints")
    if len(set(p)) != len(p):
        raise ValueError(f"{tuple(p)} repeats a vertex")
    for a, b in zip(p, p[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"{tuple(p)} is not a path: {a}-{b} is not an edge")


# ------------------------------------------------------------ single paths

def is_vertex_proper_path(g: Graph, c: VertexColoring, p: Sequence[int]) -> bool:
    _check_path(g, p)
    _check_total(g, c)
    internal = p[1:-1]
    if internal and not c.colors:
        return False
    return all(c.colors[a] != c.colors[b] for a, b in zip(internal, internal[1:]))


def is_vertex_rainbow_path(g: Graph, c: VertexColoring, p: Sequence[int]) -> bool:
    _check_path(g, p)
    _check_total(g, c)
    internal = p[1:-1]
    if internal and not c.colors:
        return False
    cols = [c.colors[x] for x in internal]
    return len(set(cols)) == len(cols)


def is_proper_edge_path(g: Graph, ec: EdgeColoring, p: Sequence[int]) -> bool:
    _check_path(g, p)
    cols = [ec[(a, b)] for a, b in zip(p, p[1:])]
    return all(x != y for x, y in zip(cols, cols[1:]))


def is_proper_coloring(g: Graph, c: VertexColoring) -> bool:
    if not c.colors:
        return g.m == 0
    _check_total(g, c)
    return all(c.colors[u] != c.colors[v] for u, v in g.edges())


# --------------------------------------------------------------- geodesics

def _geodesic_layers(g: Graph, u: int, v: int) -> list[int]:
    """Bitmask of the vertices at distance i from u on some u-v geodesic."""
    rows = _dist(g)
    d = rows[u][v]
    if d == INF:
        raise ValueError(f"{u} and {v} are in different components")
    layers = [0] * (d + 1)
    du, dv = rows[u], rows[v]
    for x in range(g.n):
        if du[x] + dv[x] == d:
            layers[du[x]] |= 1 << x
    return layers


def has_vertex_proper_geodesic(g: Graph, c: VertexColoring, u: int, v: int) -> Optional[PathWitness]:
    """A vertex-proper u-v geodesic, or None.

    Dynamic programme over the layered geodesic DAG: an internal vertex in
    layer i is reachable if some reachable layer-(i-1) neighbor carries a
    different color. Ties resolve to the least vertex id.
    """
    if u == v:
        raise ValueError("endpoints must differ")
    _check_total(g, c)
    layers = _geodesic_layers(g, u, v)
    d = len(layers) - 1
    if d == 1:
        return (u, v)
    if not c.colors:
        return None
    col = c.colors
    class_mask: dict[int, int] = {}
    for x, cx in enumerate(col):
        class_mask[cx] = class_mask.get(cx, 0) | 1 << x
    reach = [0] * d
    reach[1] = layers[1]
    for i in range(2, d):
        mask = 0
        for x in _bits(layers[i]):
            if g.adj[x] & reach[i - 1] & ~class_mask[col[x]]:
                mask |= 1 << x
        reach[i] = mask
        if not mask:
            return None
    last = reach[d - 1] & g.adj[v]
    if not last:
        return None
    path = [v]
    x = _bits(last)[0]
    for i in range(d - 1, 0, -1):
        path.append(x)
        if i > 1:
            x = _bits(g.adj[x] & reach[i - 1] & ~class_mask[col[x]])[0]
    path.append(u)
    return tuple(reversed(path))


def has_vertex_rainbow_geodesic(g: Graph, c: VertexColoring, u: int, v: int) -> Optional[PathWitness]:
    """A vertex-rainbow u-v geodesic, or None (DFS carrying the used colors)."""
    if u == v:
        raise ValueError("endpoints must differ")
    _check_total(g, c)
    layers = _geodesic_layers(g, u, v)
    d = len(layers) - 1
    if d == 1:
        return (u, v)
    if not c.colors:
        return None
    col = c.colors
    dead: set[tuple[int, int]] = set()

    def walk(x: int, i: int, used: int) -> Optional[list[int]]:
        if i == d - 1:
            return [x]
        if (x, used) in dead:
            return None
        for y in _bits(g.adj[x] & layers[i + 1]):
            if not used >> col[y] & 1:
                rest = walk(y, i + 1, used | 1 << col[y])
                if rest is not None:
                    return [x] + rest
        dead.add((x, used))
        return None

    for x in _bits(layers[1]):
        found = walk(x, 1, 1 << col[x])
        if found is not None:
            return (u, *found, v)
    return None


# ---------------------------------------------------------- disjoint paths

def _shortest_proper_path(g: Graph, u: int, v: int, col) -> Optional[PathWitness]:
    """Shortest vertex-proper u-v path by BFS over arc states (prev, cur).

    A shortest vertex-proper walk never repeats a vertex: cutting out a loop
    keeps every remaining consecutive pair, so the result is a path. (Not
    true for edge colorings, where the cut joins two unrelated edges.)
    """
    if g.has_edge(u, v):
        return (u, v)
    if col is None:
        return None
    parent: dict[tuple[int, int], Optional[tuple[int, int]]] = {}
    queue = deque()
    for x in _bits(g.adj[u]):
        if x != v:
            parent[(u, x)] = None
            queue.append((u, x))
    while queue:
        state = queue.popleft()
        p, x = state
        for y in _bits(g.adj[x]):
            if y == u:
                continue
            if (y != v and col[x] == col[y]) or (x, y) in parent:
                continue
            parent[(x, y)] = state
            if y == v:
                path = [v]
                s = (x, y)
                while s is not None:
                    path.append(s[0])
                    s = parent[s]
                return tuple(reversed(path))
            queue.append((x, y))
    return None


def _edge_color_table(g: Graph, ec: EdgeColoring) -> dict[tuple[int, int], int]:
    table = {}
    for (a, b), c in ec.assignment.items():
        table[(a, b)] = table[(b, a)] = c
    return table


def _minimal_proper_paths(g: Graph, u: int, v: int, col, edge_col) -> Iterator[tuple[int, PathWitness]]:
    """Proper u-v paths of length >= 2 whose internal vertex sets are
    inclusion-minimal, as (internal mask, path), shortest first.

    Iterative deepening on length; a prefix whose internal set already
    contains a found set is dominated and cut.
    """
    dv = _dist(g)[v]
    masks: list[int] = []
    n = g.n

    for length in range(2, n):
        batch: list[tuple[int, PathWitness]] = []
        path = [u]

        def extend(x: int, mask: int, steps_left: int):
            if steps_left == 1:
                if g.has_edge(x, v):
                    if edge_col is not None and edge_col[(path[-2], x)] == edge_col[(x, v)]:
                        return
                    batch.append((mask, tuple(path) + (v,)))
                return
            for y in _bits(g.adj[x] & ~mask):
                if y == u or y == v or dv[y] > steps_left - 1:
                    continue
                if edge_col is not None:
                    if len(path) >= 2 and edge_col[(path[-2], x)] == edge_col[(x, y)]:
                        continue
                elif x != u and col[x] == col[y]:
                    continue
                new = mask | 1 << y
                if any(f & ~new == 0 for f in masks):
                    continue
                path.append(y)
                extend(y, new, steps_left - 1)
                path.pop()

        extend(u, 0, length)
        for mask, p in batch:
            if mask not in masks:
                masks.append(mask)
                yield mask, p


def _find_k_disjoint(g: Graph, u: int, v: int, k: int, col, edge_col, max_n) -> Optional[list[PathWitness]]:
    if u == v:
        raise ValueError("endpoints must differ")
    if k < 1:
        raise ValueError("k must be positive")
    if k > _kappa(g):
        raise NotKConnectedError(f"graph is not {k}-connected (kappa={_kappa(g)})")
    check_guard(g.n, k, max_n)
    if k == 1 and edge_col is None:
        p = _shortest_proper_path(g, u, v, col)
        return None if p is None else [p]

    chosen: list[PathWitness] = []
    need = k
    if g.has_edge(u, v):
        chosen.append((u, v))
        need -= 1
    if col is None and edge_col is None:
        return None
    if need == 0:
        return chosen
    if need == 1:
        first = next(_minimal_proper_paths(g, u, v, col, edge_col), None)
        return None if first is None else chosen + [first[1]]
    cands = list(_minimal_proper_paths(g, u, v, col, edge_col))
    if len(cands) < need:
        return None

    picked: list[int] = []

    def pack(start: int, used: int, need: int) -> bool:
        if need == 0:
            return True
        free = [i for i in range(start, len(cands)) if not cands[i][0] & used]
        if len(free) < need:
            return False
        for pos, i in enumerate(free):
            if len(free) - pos < need:
                return False
            picked.append(i)
            if pack(i + 1, used | cands[i][0], need - 1):
                return True
            picked.pop()
        return False

    if not pack(0, 0, need):
        return None
    return chosen + [cands[i][1] for i in picked]


def find_k_disjoint_vertex_proper_paths(g: Graph, c: VertexColoring, u: int, v: int, k: int,
                                        max_n: Optional[int] = None) -> Optional[list[PathWitness]]:
    """k internally disjoint vertex-proper u-v paths, shortest first, or None."""
    _check_total(g, c)
    col = c.colors if c.colors else None
    return _find_k_disjoint(g, u, v, k, col, None, max_n)


def find_k_disjoint_proper_edge_paths(g: Graph, ec: EdgeColoring, u: int, v: int, k: int,
                                      max_n: Optional[int] = None) -> Optional[list[PathWitness]]:
    _check_edge_total(g, ec)
    return _find_k_disjoint(g, u, v, k, None, _edge_color_table(g, ec), max_n)


# -------------------------------------------------------- whole-graph checks

def _all_pairs(g: Graph, pair_check) -> Verdict:
    witness = {}
    for u, v in itertools.combinations(range(g.n), 2):
        w = pair_check(u, v)
        if w is None:
            return Verdict(False, failing_pair=(u, v))
        witness[(u, v)] = w
    return Verdict(True, witness=witness)


def is_proper_vertex_k_connected(g: Graph, c: VertexColoring, k: int = 1,
                                 max_n: Optional[int] = None) -> Verdict:
    _check_total(g, c)
    col = c.colors if c.colors else None
    if k > _kappa(g):
        raise NotKConnectedError(f"graph is not {k}-connected (kappa={_kappa(g)})")
    check_guard(g.n, k, max_n)
    return _all_pairs(g, lambda u, v: _find_k_disjoint(g, u, v, k, col, None, max_n))


def is_strong_proper_vertex_connected(g: Graph, c: VertexColoring) -> Verdict:
    return _all_pairs(g, lambda u, v: has_vertex_proper_geodesic(g, c, u, v))


def is_strong_rainbow_vertex_connected(g: Graph, c: VertexColoring) -> Verdict:
    return _all_pairs(g, lambda u, v: has_vertex_rainbow_geodesic(g, c, u, v))


def is_proper_k_connected_edges(g: Graph, ec: EdgeColoring, k: int = 1,
                                max_n: Optional[int] = None) -> Verdict:
    _check_edge_total(g, ec)
    table = _edge_color_table(g, ec)
    if k > _kappa(g):
        raise NotKConnectedError(f"graph is not {k}-connected (kappa={_kappa(g)})")
    check_guard(g.n, k, max_n)
    return _all_pairs(g, lambda u, v: _find_k_disjoint(g, u, v, k, None, table, max_n))


# ------------------------------------------------------------ certificates

Coloring = Union[VertexColoring, EdgeColoring]


def format_certificate(c: Coloring, g: Optional[Graph] = None) -> str:
    if isinstance(c, VertexColoring):
        lines = [f"vertex-coloring palette={c.palette}"]
        lines += [f"{v}:{col}" for v, col in enumerate(c.colors)]
    else:
        lines = [f"edge-coloring palette={c.palette}"]
        edges = g.edges() if g is not None else sorted(c.assignment)
        lines += [f"{a}-{b}:{c[(a, b)]}" for a, b in edges]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Coloring:
    tokens = text.split()
    if len(tokens) < 2 or not tokens[1].startswith("palette="):
        raise ValueError("certificate must start with '<kind>-coloring palette=P'")
    kind, palette = tokens[0], int(tokens[1].split("=", 1)[1])
    entries = [t.split(":") for t in tokens[2:]]
    if kind == "vertex-coloring":
        table = {int(a): int(b) for a, b in entries}
        if sorted(table) != list(range(len(table))):
            raise ValueError("vertex certificate must list vertices 0..n-1")
        return VertexColoring(tuple(table[v] for v in range(len(table))), palette)
    if kind == "edge-coloring":
        assignment = {}
        for e, col in entries:
            a, b = e.split("-")
            assignment[(int(a), int(b))] = int(col)
        return EdgeColoring(assignment, palette)
    raise ValueError(f"unknown certificate kind {kind!r}")
