"""Exact minimum-palette solvers.

Every solver runs palette sizes p = lower, lower+1, ... and, for each p,
walks the restricted-growth strings that use exactly p colors in
lexicographic order. Restricted growth (first item gets color 1, a new
color appears only after all smaller ones) removes color permutations, so
each partition of the items into color classes is tried once. The first
passing string is the certificate.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Union

from .coloring import (
    EdgeColoring,
    GuardError,
    NotKConnectedError,
    Verdict,
    VertexColoring,
    _kappa,
    check_guard,
    is_proper_coloring,
    is_proper_k_connected_edges,
    is_proper_vertex_k_connected,
    is_strong_proper_vertex_connected,
    is_strong_rainbow_vertex_connected,
)
from .graph import DisconnectedGraphError, Graph, diameter

MAX_N_GEODESIC = 10
MAX_N_PVC_K = 8
MAX_N_CHI = 12
MAX_EDGES_PC = 16


@dataclass
class SolveResult:
    param: str
    value: int
    certificate: Union[VertexColoring, EdgeColoring]
    colorings: int
    elapsed: float

    def summary(self) -> str:
        return f"{self.param}={self.value} colorings={self.colorings} time={self.elapsed:.3f}"


def restricted_growth_strings(length: int, p: int) -> Iterator[tuple[int, ...]]:
    """Strings over 1..p using every color, with restricted growth, in
    lexicographic order. The empty string is the only one for p = 0."""
    if p == 0:
        if length == 0:
            yield ()
        return
    if length < p:
        return
    s = [0] * length

    def rec(i: int, top: int):
        if i == length:
            yield tuple(s)
            return
        left = length - i
        # must still be able to open colors top+1..p
        for c in range(1, min(top + 1, p) + 1):
            newtop = max(top, c)
            if p - newtop > left - 1:
                continue
            s[i] = c
            yield from rec(i + 1, newtop)

    s[0] = 1
    yield from rec(1, 1)


def minimize_palette(g: Graph, checker: Callable[[object], Verdict], lower: int = 0, *,
                     param: str = "value", items: Optional[int] = None,
                     build: Optional[Callable[[tuple[int, ...], int], object]] = None) -> SolveResult:
    """Least p >= lower for which some coloring with exactly p colors passes.

    `items` is the number of colored objects (default g.n); `build` turns a
    string and palette size into the coloring the checker expects.
    """
    if items is None:
        items = g.n
    if build is None:
        build = lambda s, p: VertexColoring(s, p)
    start = time.perf_counter()
    examined = 0
    for p in range(lower, items + 1):
        # palette 0 is the empty assignment, whatever the item count
        strings = [()] if p == 0 else restricted_growth_strings(items, p)
        for s in strings:
            coloring = build(s, p)
            examined += 1
            if checker(coloring):
                return SolveResult(param, p, coloring, examined, time.perf_counter() - start)
    raise RuntimeError(f"no passing coloring up to {items} colors; checker is not monotone?")


def _require_connected(g: Graph) -> int:
    if not g.is_connected():
        raise DisconnectedGraphError("solver needs a connected graph")
    return diameter(g)


def _guard(n: int, limit: int, what: str, max_n: Optional[int]) -> None:
    limit = max_n if max_n is not None else limit
    if n > limit:
        raise GuardError(f"n={n} exceeds the {what} guard of {limit} (raise it with --max-n)")


def _geodesic_lower(g: Graph) -> int:
    d = _require_connected(g)
    return 0 if d <= 1 else 1 if d == 2 else 2


def spvc_exact(g: Graph, max_n: Optional[int] = None) -> SolveResult:
    _guard(g.n, MAX_N_GEODESIC, "spvc", max_n)
    return minimize_palette(g, lambda c: is_strong_proper_vertex_connected(g, c),
                            _geodesic_lower(g), param="spvc")


def srvc_exact(g: Graph, max_n: Optional[int] = None) -> SolveResult:
    _guard(g.n, MAX_N_GEODESIC, "srvc", max_n)
    return minimize_palette(g, lambda c: is_strong_rainbow_vertex_connected(g, c),
                            _geodesic_lower(g), param="srvc")


def _check_k(g: Graph, k: int) -> None:
    _require_connected(g)
    if g.n < 2:
        raise ValueError("graph needs at least two vertices")
    kappa = _kappa(g)
    if not 1 <= k <= kappa:
        raise NotKConnectedError(f"k={k} outside 1..kappa={kappa}")


def pvc_k_exact(g: Graph, k: int, max_n: Optional[int] = None) -> SolveResult:
    _check_k(g, k)
    if k >= 2:
        _guard(g.n, MAX_N_PVC_K, f"pvc_{k}", max_n)
    check_guard(g.n, k, max_n)
    name = "pvc" if k == 1 else f"pvc_{k}"
    return minimize_palette(g, lambda c: is_proper_vertex_k_connected(g, c, k, max_n), 0, param=name)


def pvc_exact(g: Graph, max_n: Optional[int] = None) -> SolveResult:
    return pvc_k_exact(g, 1, max_n)


def chromatic_number_exact(g: Graph, max_n: Optional[int] = None) -> SolveResult:
    _guard(g.n, MAX_N_CHI, "chi", max_n)
    return minimize_palette(g, lambda c: is_proper_coloring(g, c), 1, param="chi")


def pc_k_exact(g: Graph, k: int, max_n: Optional[int] = None,
               max_edges: Optional[int] = None) -> SolveResult:
    _check_k(g, k)
    limit = max_edges if max_edges is not None else MAX_EDGES_PC
    if g.m > limit:
        raise GuardError(f"m={g.m} exceeds the pc_k edge guard of {limit}")
    if k >= 2:
        _guard(g.n, MAX_N_PVC_K, f"pc_{k}", max_n)
    check_guard(g.n, k, max_n)
    name = "pc" if k == 1 else f"pc_{k}"
    return minimize_palette(g, lambda ec: is_proper_k_connected_edges(g, ec, k, max_n), 1,
                            param=name, items=g.m,
                            build=lambda s, p: EdgeColoring.from_sequence(g, s) if s else EdgeColoring({}, p))


SOLVERS = {
    "pvc": lambda g, k=None, max_n=None: pvc_exact(g, max_n),
    "pvc_k": lambda g, k=None, max_n=None: pvc_k_exact(g, k, max_n),
    "spvc": lambda g, k=None, max_n=None: spvc_exact(g, max_n),
    "srvc": lambda g, k=None, max_n=None: srvc_exact(g, max_n),
    "chi": lambda g, k=None, max_n=None: chromatic_number_exact(g, max_n),
    "pc_k": lambda g, k=None, max_n=None: pc_k_exact(g, k, max_n),
}
