"""Print pvc_k of complete multipartite graphs: case-tree value next to the solver value."""

import argparse

from pvconn.coloring import GuardError
from pvconn.formulas import pvc_k_complete_multipartite
from pvconn.graph import CompleteMultipartite, make_family
from pvconn.solvers import pvc_k_exact
from pvconn.sweep import multipartite_part_lists


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-total", type=int, default=7, help="largest order to tabulate")
    ap.add_argument("--max-n", type=int, help="raise the k >= 2 search guard")
    args = ap.parse_args()

    print(f"{'parts':<16} {'k':>2} {'formula':>7} {'solver':>6}  clause")
    for parts in multipartite_part_lists(args.max_total):
        g = make_family(CompleteMultipartite(*parts))
        for k in range(1, sum(parts[:-1]) + 1):
            f = pvc_k_complete_multipartite(parts, k)
            try:
                s = str(pvc_k_exact(g, k, max_n=args.max_n).value)
            except GuardError:
                s = "guard"
            mark = "" if s in ("guard", str(f.value)) else "  <-- MISMATCH"
            print(f"{','.join(map(str, parts)):<16} {k:>2} {f.value:>7} {s:>6}  {f.source}{mark}")


if __name__ == "__main__":
    main()
