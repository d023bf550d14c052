"""Command line: compute, verify, construct, sweep, oracle.

Exit status is 0 on success or a passing verdict, 1 on a failing verdict or
failed check, 2 on usage errors (including guard violations).
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from dataclasses import dataclass
from typing import Optional

from .coloring import (
    EdgeColoring,
    GuardError,
    NotKConnectedError,
    VertexColoring,
    format_certificate,
    is_proper_coloring,
    is_proper_k_connected_edges,
    is_proper_vertex_k_connected,
    is_strong_proper_vertex_connected,
    is_strong_rainbow_vertex_connected,
    parse_certificate,
)
from .constructions import (
    Certificate,
    ConstructionOutput,
    bfs_parity_coloring,
    lemma3_coloring,
    optimal_family_coloring,
    thm8_construction,
    thm9_construction,
)
from .graph import (
    DisconnectedGraphError,
    FamilyDescriptor,
    Graph,
    build_graph,
    encode_graph6,
    format_edge_list,
    make_family,
    parse_graph,
    read_graph6_file,
)
from .solvers import SOLVERS, SolveResult
from . import sweep as sweeping

PARAMS = ("pvc", "pvc_k", "spvc", "srvc", "chi", "pc_k")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input: Optional[str] = None
    param: Optional[str] = None
    k: Optional[int] = None
    max_n: Optional[int] = None
    max_k: Optional[int] = None
    machine: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.param is not None:
            if self.param not in PARAMS:
                raise UsageError(f"unknown parameter {self.param!r}")
            if self.param.endswith("_k") and self.k is None:
                raise UsageError(f"--param {self.param} needs --k")
            if not self.param.endswith("_k") and self.k is not None:
                raise UsageError(f"--param {self.param} takes no --k")
        for name in ("max_n", "max_k"):
            val = getattr(self, name)
            if val is not None and val < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")
        if self.k is not None and self.max_k is not None and self.k > self.max_k:
            raise UsageError(f"k={self.k} exceeds --max-k {self.max_k}")


def load_graph(arg: str) -> Graph:
    if arg is None:
        raise UsageError("--input is required")
    text = open(arg).read() if os.path.exists(arg) else arg
    try:
        return parse_graph(text)
    except (ValueError, IndexError) as exc:
        raise UsageError(f"cannot parse graph {arg!r}: {exc}") from exc


def load_certificate(arg: str):
    text = open(arg).read() if os.path.exists(arg) else arg.replace(";", "\n")
    try:
        return parse_certificate(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse certificate: {exc}") from exc


def _emit(lines):
    for line in lines:
        print(line)


def _certificate_inline(c) -> str:
    if isinstance(c, VertexColoring):
        return "vertex:" + ",".join(map(str, c.colors))
    return "edge:" + ",".join(f"{a}-{b}:{col}" for (a, b), col in sorted(c.assignment.items()))


def cmd_compute(cfg: RunConfig) -> int:
    g = load_graph(cfg.input)
    res: SolveResult = SOLVERS[cfg.param](g, k=cfg.k, max_n=cfg.max_n)
    if cfg.machine:
        print(f"record=result param={res.param} value={res.value} palette={res.certificate.palette} "
              f"colorings={res.colorings} time={res.elapsed:.3f} certificate={_certificate_inline(res.certificate)}")
    else:
        print(f"{res.param}={res.value}")
        print(format_certificate(res.certificate, g), end="")
        print(res.summary())
    return 0


def _verdict_for(g: Graph, param: str, k: Optional[int], cert, max_n):
    vertex = {"pvc": lambda: is_proper_vertex_k_connected(g, cert, 1, max_n),
              "pvc_k": lambda: is_proper_vertex_k_connected(g, cert, k, max_n),
              "spvc": lambda: is_strong_proper_vertex_connected(g, cert),
              "srvc": lambda: is_strong_rainbow_vertex_connected(g, cert),
              "chi": lambda: is_proper_coloring(g, cert)}
    if param == "pc_k":
        if not isinstance(cert, EdgeColoring):
            raise UsageError("pc_k needs an edge-coloring certificate")
        return is_proper_k_connected_edges(g, cert, k, max_n)
    if not isinstance(cert, VertexColoring):
        raise UsageError(f"{param} needs a vertex-coloring certificate")
    return vertex[param]()


def cmd_verify(cfg: RunConfig, cert_arg: str) -> int:
    g = load_graph(cfg.input)
    cert = load_certificate(cert_arg)
    verdict = _verdict_for(g, cfg.param, cfg.k, cert, cfg.max_n)
    passed = bool(verdict)
    pair = getattr(verdict, "failing_pair", None)
    if cfg.machine:
        line = f"record=verdict param={cfg.param} palette={cert.palette} pass={int(passed)}"
        if pair:
            line += f" pair={pair[0]}-{pair[1]}"
        print(line)
    else:
        if passed:
            print(f"verdict=pass param={cfg.param} palette={cert.palette}")
        elif pair:
            print(f"verdict=fail param={cfg.param} palette={cert.palette} failing_pair={pair[0]},{pair[1]}")
        else:
            print(f"verdict=fail param={cfg.param} palette={cert.palette}")
    return 0 if passed else 1


def _build_construction(kind: str, numbers: list[int], cfg: RunConfig) -> ConstructionOutput:
    def need(count):
        if len(numbers) != count:
            raise UsageError(f"construct {kind} takes {count} integer argument(s)")

    if kind == "thm8":
        need(2)
        return thm8_construction(*numbers)
    if kind == "thm9":
        need(3)
        return thm9_construction(*numbers)
    if kind in ("bfs", "lemma3"):
        need(0)
        g = load_graph(cfg.input)
        if kind == "bfs":
            return ConstructionOutput(g, [Certificate("pvc", bfs_parity_coloring(g), "proper-vertex-connected", 2)])
        c = lemma3_coloring(g)
        return ConstructionOutput(g, [Certificate("spvc", c, "strong-proper", c.palette)])
    if kind in ("cycle", "wheel"):
        need(1)
        if cfg.k is None:
            raise UsageError(f"construct {kind} needs --k")
        tag = FamilyDescriptor.CYCLE if kind == "cycle" else FamilyDescriptor.WHEEL
        d = FamilyDescriptor(tag, (numbers[0],))
        g = make_family(d)
        c = optimal_family_coloring(d, cfg.k)
        cert = Certificate(f"pvc_{cfg.k}", c, f"pvc_{cfg.k}", c.palette)
        return ConstructionOutput(g, [cert])
    raise UsageError(f"unknown construction {kind!r}")


def _check_certificate(g: Graph, cert: Certificate, max_n) -> bool:
    if cert.predicate.startswith("pvc_"):
        k = int(cert.predicate.split("_")[1])
        return bool(is_proper_vertex_k_connected(g, cert.coloring, k, max_n))
    return cert.check(g)


def cmd_construct(cfg: RunConfig, kind: str, numbers: list[int]) -> int:
    try:
        out = _build_construction(kind, numbers, cfg)
    except (ValueError, DisconnectedGraphError) as exc:
        if isinstance(exc, NotKConnectedError):
            raise
        raise UsageError(str(exc)) from exc
    g = out.graph
    all_ok = True
    if cfg.machine:
        print(f"record=graph n={g.n} m={g.m} graph6={encode_graph6(g)} "
              f"edges={','.join(f'{u}-{v}' for u, v in g.edges())}")
    else:
        print(f"graph6 {encode_graph6(g)}")
        print(format_edge_list(g), end="")
    for cert in out.certificates:
        ok = _check_certificate(g, cert, cfg.max_n)
        all_ok &= ok
        if cfg.machine:
            print(f"record=certificate name={cert.name} predicate={cert.predicate} palette={cert.coloring.palette} "
                  f"claimed={cert.claimed} pass={int(ok)} colors={','.join(map(str, cert.coloring.colors))}")
        else:
            print(format_certificate(cert.coloring, g), end="")
            print(f"verdict {cert.name}: {cert.predicate} palette={cert.coloring.palette} "
                  f"{'pass' if ok else 'FAIL'}")
    return 0 if all_ok else 1


def _parse_orders(text: str) -> list[int]:
    orders = []
    for chunk in text.split(","):
        if "-" in chunk:
            lo, hi = chunk.split("-")
            orders.extend(range(int(lo), int(hi) + 1))
        else:
            orders.append(int(chunk))
    bad = [n for n in orders if not 3 <= n <= 6]
    if bad:
        raise UsageError(f"built-in enumeration covers orders 3-6, got {bad}; pass a graph6 corpus with --input")
    return orders


def _random_connected(n: int, rng: random.Random) -> Graph:
    while True:
        p = rng.uniform(0.2, 0.8)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = build_graph(n, edges)
        if g.is_connected():
            return g


def cmd_sweep(cfg: RunConfig, orders: str, rebuild: bool, catalog: Optional[str],
              random_count: int, inject_fault: bool) -> int:
    if cfg.input:
        graphs = list(read_graph6_file(cfg.input))
        check_catalog = False
    else:
        graphs = sweeping.corpus(_parse_orders(orders))
        check_catalog = None
    pvc_formula = sweeping.pvc_by_diameter
    formula = (lambda g: pvc_formula(g).value) if not inject_fault else (
        lambda g: pvc_formula(g).value + (1 if pvc_formula(g).value == 1 else 0))
    probe = cfg.max_k is None or cfg.max_k >= 2
    report = sweeping.sweep(graphs, probe_k2=probe, max_n=cfg.max_n, pvc_formula=formula,
                            check_catalog=check_catalog, rebuild=rebuild, catalog_file=catalog)
    if random_count:
        rng = random.Random(cfg.seed)
        for _ in range(random_count):
            g = _random_connected(rng.choice((7, 8)), rng)
            c = lemma3_coloring(g)
            ok = bool(is_strong_proper_vertex_connected(g, c)) and c.palette < g.n - 3
            report.check("sparse-palette-certificate (random n=7,8)", ok, encode_graph6(g))
    _emit(report.lines(cfg.machine))
    return 0 if report.ok else 1


def cmd_oracle(cfg: RunConfig) -> int:
    rows = list(sweeping.oracle_rows(max_n=cfg.max_n))
    _emit(row.line(cfg.machine) for row in rows)
    probe_graphs = sweeping.corpus(range(3, 6))
    probe = sweeping.edge_vs_vertex_probe(probe_graphs, cfg.max_n)
    if probe:
        diffs = [pc - pvc for _, pc, pvc in probe]
        if cfg.machine:
            print(f"record=probe eligible={len(probe)} min_diff={min(diffs)} max_diff={max(diffs)}")
        else:
            print(f"observation: pc_2 - pvc_2 over {len(probe)} 2-connected graphs of order 3-5: "
                  f"min {min(diffs)}, max {max(diffs)}")
        for g6, pc, pvc in probe:
            if pc < pvc:
                print(f"FINDING pc_2 < pvc_2 on {g6}: pc_2={pc} pvc_2={pvc}")
    mismatches = sum(1 for r in rows if r.agree is False)
    skipped = sum(1 for r in rows if r.agree is None)
    if cfg.machine:
        print(f"record=summary rows={len(rows)} mismatches={mismatches} skipped={skipped}")
    else:
        print(f"{len(rows)} rows, {mismatches} mismatches, {skipped} skipped")
    return 1 if mismatches else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "machine"), default="human")
    common.add_argument("--max-n", type=int, help="override the instance-size guard")
    common.add_argument("--max-k", type=int, help="largest k to attempt")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="pvconn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="exact value of a parameter")
    p.add_argument("--input", required=True, help="graph6 / edge-list file, or an inline graph")
    p.add_argument("--param", required=True, choices=PARAMS)
    p.add_argument("--k", type=int)

    p = sub.add_parser("verify", parents=[common], help="check a certificate coloring")
    p.add_argument("--input", required=True)
    p.add_argument("--param", required=True, choices=PARAMS)
    p.add_argument("--k", type=int)
    p.add_argument("--cert", required=True, help="certificate file, or inline with ';' separators")

    p = sub.add_parser("construct", parents=[common], help="explicit constructions with certificates")
    p.add_argument("kind", choices=("thm8", "thm9", "bfs", "lemma3", "cycle", "wheel"))
    p.add_argument("numbers", nargs="*", type=int)
    p.add_argument("--input")
    p.add_argument("--k", type=int)

    p = sub.add_parser("sweep", parents=[common], help="check closed forms and bounds over a small-graph corpus")
    p.add_argument("--orders", default="3-6")
    p.add_argument("--input", help="graph6 corpus file instead of the built-in enumeration")
    p.add_argument("--rebuild-catalog", action="store_true")
    p.add_argument("--catalog", help="catalog file (default: the packaged one)")
    p.add_argument("--random", type=int, default=0, help="extra random order-7/8 graphs for the n>=7 colorings")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    sub.add_parser("oracle", parents=[common], help="closed forms against exact solvers")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(command=args.command, input=getattr(args, "input", None),
                        param=getattr(args, "param", None), k=getattr(args, "k", None),
                        max_n=args.max_n, max_k=args.max_k, machine=args.format == "machine",
                        seed=args.seed)
        if args.command == "compute":
            return cmd_compute(cfg)
        if args.command == "verify":
            return cmd_verify(cfg, args.cert)
        if args.command == "construct":
            return cmd_construct(cfg, args.kind, args.numbers)
        if args.command == "sweep":
            return cmd_sweep(cfg, args.orders, args.rebuild_catalog, args.catalog, args.random, args.inject_fault)
        return cmd_oracle(cfg)
    except (UsageError, GuardError, NotKConnectedError, DisconnectedGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
