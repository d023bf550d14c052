"""Closed-form values of pvc_k, spvc and pc_k on named families, and the
classification of graphs whose spvc sits at n-2 or n-3.

Each evaluator returns a FormulaResult whose `source` names the single
clause that produced the value.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from importlib import resources
from pathlib import Path as FsPath
from typing import Iterable, Optional, Sequence

from .graph import (
    FamilyDescriptor,
    Graph,
    canonical_graph6,
    diameter,
    enumerate_connected_graphs,
    make_family,
)

CATALOG_RESOURCE = "spvc_extremal.g6"


class NoClosedForm(ValueError):
    pass


@dataclass(frozen=True)
class FormulaResult:
    value: int
    source: str

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("formula value must be non-negative")


def pvc_by_diameter(g: Graph) -> FormulaResult:
    if g.n < 2:
        raise ValueError("trivial graph has no pvc")
    d = diameter(g)
    if d == 1:
        return FormulaResult(0, "pvc:complete")
    if d == 2:
        return FormulaResult(1, "pvc:diameter=2")
    return FormulaResult(2, "pvc:diameter>=3")


def pvc_k_cycle(n: int, k: int) -> FormulaResult:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    if k == 1:
        if n == 3:
            return FormulaResult(0, "cycle:k=1:n=3")
        if n <= 5:
            return FormulaResult(1, "cycle:k=1:n=4,5")
        return FormulaResult(2, "cycle:k=1:n>=6")
    if k == 2:
        if n == 3:
            return FormulaResult(1, "cycle:k=2:n=3")
        if n % 2 == 0:
            return FormulaResult(2, "cycle:k=2:even")
        return FormulaResult(3, "cycle:k=2:odd")
    raise ValueError(f"cycles are only 2-connected, got k={k}")


def pvc_k_wheel(n: int, k: int) -> FormulaResult:
    if n < 3:
        raise ValueError("wheels need n >= 3")
    if k == 1:
        return FormulaResult(0, "wheel:k=1:n=3") if n == 3 else FormulaResult(1, "wheel:k=1:n>=4")
    if k in (2, 3):
        if n == 3:
            return FormulaResult(1, f"wheel:k={k}:n=3")
        rim = pvc_k_cycle(n, k - 1)
        return FormulaResult(rim.value, f"wheel:k={k}:rim {rim.source}")
    raise ValueError(f"wheels are only 3-connected, got k={k}")


def pvc_k_complete(n: int, k: int) -> FormulaResult:
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} outside 1..{n - 1} for K_{n}")
    return FormulaResult(0, "complete:k=1") if k == 1 else FormulaResult(1, "complete:k>=2")


def pvc_k_complete_bipartite(n1: int, n2: int, k: int) -> FormulaResult:
    n1, n2 = sorted((n1, n2))
    if n1 < 2:
        raise ValueError("complete bipartite formula needs both parts >= 2")
    if not 1 <= k <= n1:
        raise ValueError(f"k={k} outside 1..{n1}")
    return FormulaResult(1, "bipartite:k=1") if k == 1 else FormulaResult(2, "bipartite:k>=2")


def pvc_k_complete_multipartite(parts: Sequence[int], k: int) -> FormulaResult:
    """pvc_k of K_{n_1,...,n_t}; parts ascending, t >= 3, largest part >= 2.

    With m the sum of all parts but the largest (the connectivity), the
    clauses for k = m-1 and k = m are tried in a fixed order and the first
    match wins.
    """
    parts = list(parts)
    if parts != sorted(parts) or not parts or parts[0] < 1:
        raise ValueError(f"parts must be positive and ascending, got {parts}")
    t = len(parts)
    if t < 3 or parts[-1] < 2:
        raise ValueError("needs at least three parts and a part of size >= 2")
    m = sum(parts[:-1])
    if not 1 <= k <= m:
        raise ValueError(f"k={k} outside 1..{m}")
    top = parts[-1]
    second = parts[-2]
    third = parts[-3]
    fourth = parts[-4] if t >= 4 else None

    if k <= m - 2:
        if k <= m - second + 1:
            return FormulaResult(1, "multipartite:k<=m-2:low")
        return FormulaResult(2, "multipartite:k<=m-2:high")

    if k == m - 1:
        if second <= 2:
            return FormulaResult(1, "multipartite:k=m-1:second<=2")
        top_three_odd = top == second == third and top % 2 == 1
        if not top_three_odd:
            return FormulaResult(2, "multipartite:k=m-1:second>=3")
        return FormulaResult(3, "multipartite:k=m-1:top three equal odd")

    # k == m
    top_four_fours = t >= 4 and top == second == third == fourth == 4
    if second == 1:
        return FormulaResult(1, "multipartite:k=m:second=1")
    if 2 <= second <= top - 2:
        return FormulaResult(2, "multipartite:k=m:gap>=2")
    if (second == top - 1 >= 2 and third <= 2) or (second == top >= 2 and third == 1):
        return FormulaResult(2, "multipartite:k=m:near-equal, small third")
    if ((second == top - 1 and third >= 3) or (second == top >= 3 and third >= 2)) and not top_four_fours:
        return FormulaResult(3, "multipartite:k=m:near-equal, large third")
    if top_four_fours:
        return FormulaResult(4, "multipartite:k=m:top four are 4")
    if all(x in (1, 2) for x in parts):
        s = parts.count(2)
        return FormulaResult(s, "multipartite:k=m:ones and twos")
    raise AssertionError(f"no clause matched parts={parts}, k={k}")


def pc_k_bipartite_formula(t: int, k: int) -> FormulaResult:
    """pc_k of K_{t,k} for 2 <= k < t."""
    if not 2 <= k < t:
        raise ValueError(f"needs 2 <= k < t, got t={t}, k={k}")
    return FormulaResult(t, "pc:bipartite K_{t,k}")


def spvc_family_formula(d: FamilyDescriptor) -> FormulaResult:
    tag, p = d.tag, d.params
    if tag == FamilyDescriptor.COMPLETE:
        return FormulaResult(0, "spvc:complete")
    if tag == FamilyDescriptor.PATH:
        (n,) = p
        if n < 2:
            raise ValueError("trivial path")
        if n == 2:
            return FormulaResult(0, "spvc:complete")
        return FormulaResult(1, "spvc:path n=3") if n == 3 else FormulaResult(2, "spvc:path n>=4")
    if tag == FamilyDescriptor.CYCLE:
        (n,) = p
        if n == 3:
            return FormulaResult(0, "spvc:complete")
        if n <= 5:
            return FormulaResult(1, "spvc:cycle n=4,5")
        if n % 2 == 0:
            return FormulaResult(2, "spvc:cycle even n>=6")
        return FormulaResult(3, "spvc:cycle odd n>=7")
    if tag == FamilyDescriptor.BIPARTITE:
        if sum(p) == 2:
            return FormulaResult(0, "spvc:complete")
        return FormulaResult(1, "spvc:complete bipartite")
    if tag == FamilyDescriptor.MULTIPARTITE:
        if max(p) == 1:
            return FormulaResult(0, "spvc:complete")
        return FormulaResult(1, "spvc:complete multipartite")
    if tag == FamilyDescriptor.WHEEL:
        (n,) = p
        return FormulaResult(0, "spvc:complete") if n == 3 else FormulaResult(1, "spvc:wheel n>=4")
    raise NoClosedForm(f"no closed form for spvc of {d}")


def pvc_k_family_formula(d: FamilyDescriptor, k: int) -> FormulaResult:
    """Dispatch pvc_k to the closed form for any applicable family tag."""
    tag, p = d.tag, d.params
    if tag == FamilyDescriptor.COMPLETE:
        return pvc_k_complete(p[0], k)
    if tag == FamilyDescriptor.CYCLE:
        return pvc_k_cycle(p[0], k)
    if tag == FamilyDescriptor.WHEEL:
        return pvc_k_wheel(p[0], k)
    if tag == FamilyDescriptor.BIPARTITE:
        return pvc_k_complete_bipartite(*p, k)
    if tag == FamilyDescriptor.MULTIPARTITE:
        if max(p) == 1:
            return pvc_k_complete(len(p), k)
        return pvc_k_complete_multipartite(p, k)
    if tag == FamilyDescriptor.PATH and k == 1:
        n = p[0]
        return FormulaResult(0 if n == 2 else 1 if n == 3 else 2, "path:by diameter")
    raise NoClosedForm(f"no closed form for pvc_{k} of {d}")


# ------------------------------------------------------------ extremal sets

class SpvcClass(enum.Enum):
    AT_N_MINUS_2 = "AT_N_MINUS_2"
    AT_N_MINUS_3 = "AT_N_MINUS_3"
    BELOW = "BELOW"


def build_extremal_catalog(orders: Iterable[int] = (3, 4, 5, 6)) -> dict[int, list[str]]:
    """Canonical graph6 strings of the connected graphs with spvc = n - 3."""
    from .solvers import spvc_exact

    catalog = {}
    for n in orders:
        catalog[n] = [canonical_graph6(g) for g in enumerate_connected_graphs(n)
                      if spvc_exact(g).value == n - 3]
    return catalog


def format_catalog(catalog: dict[int, list[str]]) -> str:
    lines = []
    for n in sorted(catalog):
        lines.append(f"# order {n}, spvc {n - 3}")
        lines.extend(catalog[n])
    return "\n".join(lines) + "\n"


def parse_catalog(text: str) -> dict[int, list[str]]:
    catalog: dict[int, list[str]] = {}
    order = None
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            words = line.lstrip("# ").replace(",", "").split()
            order = int(words[words.index("order") + 1])
            catalog.setdefault(order, [])
        else:
            if order is None:
                raise ValueError("catalog entry before any '# order' header")
            catalog[order].append(line)
    return catalog


def catalog_path() -> FsPath:
    return FsPath(str(resources.files("pvconn") / "data" / CATALOG_RESOURCE))


_catalog_cache: Optional[dict[int, list[str]]] = None


def load_extremal_catalog() -> dict[int, list[str]]:
    global _catalog_cache
    if _catalog_cache is None:
        _catalog_cache = parse_catalog(catalog_path().read_text())
    return _catalog_cache


def write_extremal_catalog(catalog: dict[int, list[str]], path=None) -> FsPath:
    global _catalog_cache
    path = FsPath(path) if path is not None else catalog_path()
    path.write_text(format_catalog(catalog))
    _catalog_cache = None
    return path


def classify_spvc_extremal(g: Graph) -> SpvcClass:
    n = g.n
    if n < 3:
        raise ValueError("classification needs n >= 3")
    if n >= 7:
        return SpvcClass.BELOW
    code = canonical_graph6(g)
    paths = {canonical_graph6(make_family(FamilyDescriptor(FamilyDescriptor.PATH, (k,)))) for k in (3, 4)}
    if code in paths:
        return SpvcClass.AT_N_MINUS_2
    if code in load_extremal_catalog().get(n, ()):
        return SpvcClass.AT_N_MINUS_3
    return SpvcClass.BELOW


def spvc_bound_check(g: Graph) -> dict:
    """Exact spvc against the n-2 upper bound and the extremal classes."""
    from .solvers import spvc_exact

    if g.n < 3:
        raise ValueError("bound check needs n >= 3")
    value = spvc_exact(g).value
    cls = classify_spvc_extremal(g)
    expected = {SpvcClass.AT_N_MINUS_2: g.n - 2, SpvcClass.AT_N_MINUS_3: g.n - 3}.get(cls)
    return {
        "n": g.n,
        "spvc": value,
        "upper": g.n - 2,
        "within_bound": 0 <= value <= g.n - 2,
        "class": cls.value,
        "class_consistent": value == expected if expected is not None else value < g.n - 3,
    }
