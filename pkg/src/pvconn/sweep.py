"""Corpus sweep and formula-versus-solver cross-check."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Optional

from . import formulas
from .coloring import GuardError, _kappa, is_proper_vertex_k_connected, is_strong_proper_vertex_connected
from .constructions import bfs_parity_coloring, lemma3_coloring
from .formulas import (
    NoClosedForm,
    SpvcClass,
    classify_spvc_extremal,
    pvc_by_diameter,
    pvc_k_family_formula,
    spvc_family_formula,
)
from .graph import (
    FamilyDescriptor,
    Graph,
    canonical_graph6,
    diameter,
    enumerate_connected_graphs,
    make_family,
    recognize_family,
)
from .solvers import (
    chromatic_number_exact,
    pc_k_exact,
    pvc_k_exact,
    spvc_exact,
    srvc_exact,
)

EXPECTED_EXTREMAL_COUNTS = {3: 1, 4: 4, 5: 6, 6: 1}


@dataclass
class CheckTally:
    passed: int = 0
    failed: int = 0
    witnesses: list[str] = field(default_factory=list)

    def record(self, ok: bool, g6: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.witnesses.append(g6)


@dataclass
class SweepReport:
    per_order: dict[int, int] = field(default_factory=dict)
    checks: dict[str, CheckTally] = field(default_factory=dict)
    extremal: dict[int, list[str]] = field(default_factory=dict)
    probe: list[tuple[str, int, int]] = field(default_factory=list)
    probe_skipped: int = 0
    elapsed: float = 0.0

    def check(self, name: str, ok: bool, g6: str) -> None:
        self.checks.setdefault(name, CheckTally()).record(ok, g6)

    @property
    def ok(self) -> bool:
        return all(t.failed == 0 for t in self.checks.values())

    @property
    def total(self) -> int:
        return sum(self.per_order.values())

    def probe_range(self) -> Optional[tuple[int, int]]:
        if not self.probe:
            return None
        diffs = [pc - pvc for _, pc, pvc in self.probe]
        return min(diffs), max(diffs)

    def lines(self, machine: bool = False) -> list[str]:
        out = []
        if machine:
            for n in sorted(self.per_order):
                out.append(f"record=order n={n} graphs={self.per_order[n]} extremal={len(self.extremal.get(n, []))}")
            for name in sorted(self.checks):
                t = self.checks[name]
                wit = ",".join(t.witnesses) if t.witnesses else "-"
                out.append(f"record=check name={name.replace(' ', '_')} passed={t.passed} failed={t.failed} witnesses={wit}")
            rng = self.probe_range()
            if rng is not None:
                out.append(f"record=probe eligible={len(self.probe)} skipped={self.probe_skipped} "
                           f"min_diff={rng[0]} max_diff={rng[1]}")
            out.append(f"record=summary graphs={self.total} ok={int(self.ok)} time={self.elapsed:.3f}")
            return out
        for n in sorted(self.per_order):
            out.append(f"order {n}: {self.per_order[n]} graphs, {len(self.extremal.get(n, []))} with spvc = n-3")
        width = max((len(k) for k in self.checks), default=10)
        for name in sorted(self.checks):
            t = self.checks[name]
            status = "ok" if t.failed == 0 else "FAIL"
            line = f"  {name:<{width}}  {status:4}  passed={t.passed} failed={t.failed}"
            if t.witnesses:
                line += "  witnesses: " + " ".join(t.witnesses[:10])
            out.append(line)
        rng = self.probe_range()
        if rng is not None:
            out.append(f"pc_2 - pvc_2 over {len(self.probe)} eligible graphs: min {rng[0]}, max {rng[1]}"
                       + (f" ({self.probe_skipped} skipped by guards)" if self.probe_skipped else ""))
            for g6, pc, pvc in self.probe:
                if pc < pvc:
                    out.append(f"FINDING pc_2 < pvc_2 on {g6}: pc_2={pc} pvc_2={pvc}")
        out.append(f"{self.total} graphs, {'all checks pass' if self.ok else 'FAILURES'} in {self.elapsed:.1f}s")
        return out


def _is_path(g: Graph) -> bool:
    return recognize_family(g).tag == FamilyDescriptor.PATH


def sweep(graphs: Iterable[Graph], *, probe_k2: bool = True, max_n: Optional[int] = None,
          pvc_formula: Callable[[Graph], int] = lambda g: pvc_by_diameter(g).value,
          check_catalog: Optional[bool] = None, rebuild: bool = False,
          catalog_file=None) -> SweepReport:
    """Check every corpus graph against the closed forms and bounds.

    `pvc_formula` is injectable so the harness can be tested against a
    deliberately broken formula. With `rebuild`, the extremal catalog is
    rewritten from this corpus before it is compared.
    """
    start = time.perf_counter()
    report = SweepReport()
    corpus = sorted(((canonical_graph6(g), g) for g in graphs), key=lambda t: (t[1].n, t[0]))
    for g6, g in corpus:
        n = g.n
        report.per_order[n] = report.per_order.get(n, 0) + 1
        diam = diameter(g)
        pvc = pvc_k_exact(g, 1, max_n).value
        spvc = spvc_exact(g, max_n).value
        srvc = srvc_exact(g, max_n).value
        chi = chromatic_number_exact(g, max_n).value
        pc = pc_k_exact(g, 1, max_n, max_edges=max(g.m, 16)).value

        report.check("pvc-by-diameter", pvc == pvc_formula(g), g6)
        report.check("spvc-zero-iff-complete", (spvc == 0) == (diam == 1), g6)
        report.check("spvc-one-iff-diameter-2", (spvc == 1) == (diam == 2), g6)
        report.check("sandwich pvc<=spvc<=min(chi,srvc)", pvc <= spvc <= min(chi, srvc), g6)
        report.check("pvc-at-most-chi", pvc <= chi, g6)
        report.check("pc>=pvc", pc >= pvc, g6)
        report.check("srvc<=n-2", srvc <= n - 2, g6)
        report.check("srvc=n-2 iff path", (srvc == n - 2) == _is_path(g), g6)
        report.check("spvc<=n-2", 0 <= spvc <= n - 2, g6)
        report.check("spvc=n-2 iff P3,P4", (spvc == n - 2) == (_is_path(g) and n in (3, 4)), g6)
        if n <= 6:
            cls = classify_spvc_extremal(g)
            report.check("extremal-class",
                         (cls == SpvcClass.AT_N_MINUS_2) == (spvc == n - 2)
                         and (cls == SpvcClass.AT_N_MINUS_3) == (spvc == n - 3), g6)
        else:
            report.check("spvc<n-3 for n>=7", spvc < n - 3, g6)
            c = lemma3_coloring(g)
            report.check("sparse-palette-certificate",
                         c.palette < n - 3 and bool(is_strong_proper_vertex_connected(g, c)), g6)
        if spvc == n - 3:
            report.extremal.setdefault(n, []).append(g6)
        report.check("bfs-parity-certificate",
                     bool(is_proper_vertex_k_connected(g, bfs_parity_coloring(g), 1, max_n)), g6)

        fam = recognize_family(g)
        try:
            report.check("spvc-family-formula", spvc_family_formula(fam).value == spvc, g6)
        except NoClosedForm:
            pass
        if fam.tag != FamilyDescriptor.OTHER:
            for k in range(1, _kappa(g) + 1):
                try:
                    want = pvc_k_family_formula(fam, k).value
                    got = pvc if k == 1 else pvc_k_exact(g, k, max_n).value
                except (ValueError, GuardError):
                    continue
                report.check("pvc_k-family-formula", want == got, g6)

        if probe_k2 and _kappa(g) >= 2:
            try:
                report.probe.append((g6, pc_k_exact(g, 2, max_n).value, pvc_k_exact(g, 2, max_n).value))
            except GuardError:
                report.probe_skipped += 1

    orders = set(report.per_order)
    if rebuild:
        rebuild_catalog(report, catalog_file)
    if check_catalog is None:
        check_catalog = orders <= set(EXPECTED_EXTREMAL_COUNTS)
    if check_catalog:
        stored = (formulas.parse_catalog(open(catalog_file).read()) if catalog_file
                  else formulas.load_extremal_catalog())
        for n in sorted(orders):
            found = sorted(report.extremal.get(n, []))
            report.check(f"extremal-count order {n}",
                         len(found) == EXPECTED_EXTREMAL_COUNTS[n], ",".join(found) or "-")
            report.check(f"extremal-catalog order {n}", found == sorted(stored.get(n, [])),
                         ",".join(sorted(set(found) ^ set(stored.get(n, [])))) or "-")
    report.elapsed = time.perf_counter() - start
    return report


def corpus(orders: Iterable[int]) -> list[Graph]:
    return [g for n in orders for g in enumerate_connected_graphs(n)]


def rebuild_catalog(report: SweepReport, path=None):
    """Replace the catalog entries of every swept order; other orders keep
    their stored entries."""
    try:
        catalog = (formulas.parse_catalog(open(path).read()) if path
                   else dict(formulas.load_extremal_catalog()))
    except FileNotFoundError:
        catalog = {}
    for n in report.per_order:
        if n in EXPECTED_EXTREMAL_COUNTS:
            catalog[n] = sorted(report.extremal.get(n, []))
    return formulas.write_extremal_catalog(catalog, path)


# ------------------------------------------------------------------ oracle

@dataclass
class OracleRow:
    instance: str
    formula: Optional[int]
    solver: Optional[int]
    note: str = ""

    @property
    def agree(self) -> Optional[bool]:
        if self.formula is None or self.solver is None:
            return None
        return self.formula == self.solver

    def line(self, machine: bool = False) -> str:
        if machine:
            agree = {None: "skip", True: "ok", False: "MISMATCH"}[self.agree]
            inst = self.instance.replace(" ", "_")
            return f"record=row instance={inst} formula={self.formula} solver={self.solver} status={agree}"
        if self.agree is None:
            return f"{self.instance}: skipped ({self.note})"
        status = "ok" if self.agree else "MISMATCH"
        return f"{self.instance}: formula {self.formula}, solver {self.solver}, {status}"


def multipartite_part_lists(max_total: int) -> list[tuple[int, ...]]:
    out = []
    for t in range(3, max_total + 1):
        for parts in combinations_with_replacement(range(1, max_total + 1), t):
            if sum(parts) <= max_total and parts[-1] >= 2:
                out.append(parts)
    return sorted(out, key=lambda p: (sum(p), len(p), p))


def oracle_rows(max_n: Optional[int] = None, max_cycle: int = 9, max_wheel: int = 7,
                max_parts_total: int = 7) -> Iterable[OracleRow]:
    def solve(fn, *args):
        try:
            return fn(*args, max_n=max_n).value, ""
        except GuardError as exc:
            return None, str(exc)

    for n in range(3, max_cycle + 1):
        g = make_family(FamilyDescriptor(FamilyDescriptor.CYCLE, (n,)))
        for k in (1, 2):
            val, note = solve(pvc_k_exact, g, k)
            yield OracleRow(f"C_{n} k={k}", formulas.pvc_k_cycle(n, k).value, val, note)
    for n in range(3, max_wheel + 1):
        g = make_family(FamilyDescriptor(FamilyDescriptor.WHEEL, (n,)))
        for k in (1, 2, 3):
            val, note = solve(pvc_k_exact, g, k)
            yield OracleRow(f"W_{n} k={k}", formulas.pvc_k_wheel(n, k).value, val, note)
    for n1, n2 in ((2, 2), (2, 3), (3, 3), (2, 4)):
        g = make_family(FamilyDescriptor(FamilyDescriptor.BIPARTITE, (n1, n2)))
        for k in range(1, n1 + 1):
            val, note = solve(pvc_k_exact, g, k)
            yield OracleRow(f"K_{{{n1},{n2}}} k={k}", formulas.pvc_k_complete_bipartite(n1, n2, k).value, val, note)
    for parts in multipartite_part_lists(max_parts_total):
        d = FamilyDescriptor(FamilyDescriptor.MULTIPARTITE, parts)
        g = make_family(d)
        for k in range(1, d.m + 1):
            val, note = solve(pvc_k_exact, g, k)
            name = "K_{" + ",".join(map(str, parts)) + "}"
            yield OracleRow(f"{name} k={k}", formulas.pvc_k_complete_multipartite(parts, k).value, val, note)
    for t, k in ((3, 2), (4, 2)):
        g = make_family(FamilyDescriptor(FamilyDescriptor.BIPARTITE, (k, t)))
        val, note = solve(pc_k_exact, g, k)
        yield OracleRow(f"K_{{{t},{k}}} pc_{k}", formulas.pc_k_bipartite_formula(t, k).value, val, note)
        val, note = solve(pvc_k_exact, g, k)
        yield OracleRow(f"K_{{{t},{k}}} pvc_{k}", 2, val, note)
    # pc_2 equals pvc_2 on cycles of order >= 4
    for n in range(4, 8):
        g = make_family(FamilyDescriptor(FamilyDescriptor.CYCLE, (n,)))
        val, note = solve(pc_k_exact, g, 2)
        yield OracleRow(f"C_{n} pc_2", formulas.pvc_k_cycle(n, 2).value, val, note)


def edge_vs_vertex_probe(graphs: Iterable[Graph], max_n: Optional[int] = None) -> list[tuple[str, int, int]]:
    """(graph6, pc_2, pvc_2) for every 2-connected graph within guards."""
    rows = []
    for g in graphs:
        if _kappa(g) < 2:
            continue
        try:
            rows.append((canonical_graph6(g), pc_k_exact(g, 2, max_n).value, pvc_k_exact(g, 2, max_n).value))
        except GuardError:
            continue
    return rows
