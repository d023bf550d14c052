"""Sweep the built-in corpus (or a graph6 file) and print the tallies."""

import argparse
import sys

from pvconn.graph import read_graph6_file
from pvconn.sweep import corpus, sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", type=int, nargs="+", default=[3, 4, 5, 6])
    ap.add_argument("--input", help="graph6 corpus file")
    ap.add_argument("--no-probe", action="store_true", help="skip the pc_2 / pvc_2 probe")
    ap.add_argument("--max-n", type=int)
    ap.add_argument("--machine", action="store_true")
    args = ap.parse_args()

    graphs = list(read_graph6_file(args.input)) if args.input else corpus(args.orders)
    report = sweep(graphs, probe_k2=not args.no_probe, max_n=args.max_n,
                   check_catalog=False if args.input else None)
    for line in report.lines(args.machine):
        print(line)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
