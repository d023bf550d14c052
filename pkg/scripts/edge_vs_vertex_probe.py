"""Compare pc_2 with pvc_2 on every 2-connected graph of the chosen orders.

Reports the spread of pc_2 - pvc_2; a negative difference is printed as a
FINDING but never changes the exit status.
"""

import argparse
from collections import Counter

from pvconn.sweep import corpus, edge_vs_vertex_probe


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", type=int, nargs="+", default=[3, 4, 5, 6])
    ap.add_argument("--max-n", type=int)
    ap.add_argument("-v", "--verbose", action="store_true", help="one line per graph")
    args = ap.parse_args()

    rows = edge_vs_vertex_probe(corpus(args.orders), args.max_n)
    if not rows:
        print("no eligible graphs")
        return
    hist = Counter(pc - pvc for _, pc, pvc in rows)
    for g6, pc, pvc in rows:
        if args.verbose:
            print(f"{g6:<8} pc_2={pc} pvc_2={pvc}")
        if pc < pvc:
            print(f"FINDING pc_2 < pvc_2 on {g6}: pc_2={pc} pvc_2={pvc}")
    print(f"{len(rows)} graphs; difference histogram: "
          + ", ".join(f"{d}: {c}" for d, c in sorted(hist.items())))


if __name__ == "__main__":
    main()
