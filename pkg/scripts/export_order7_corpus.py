"""Write the 853 connected graphs on 7 vertices as graph6, one per line.

Uses the networkx graph atlas (install the `test` extra). The output can be
fed to `pvconn sweep --input`.
"""

import argparse

import networkx as nx


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("output", help="destination .g6 file")
    args = ap.parse_args()
    graphs = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == 7 and nx.is_connected(h)]
    with open(args.output, "w") as fh:
        fh.write("# connected graphs of order 7 (networkx atlas)\n")
        for h in graphs:
            fh.write(nx.to_graph6_bytes(h, header=False).decode().strip() + "\n")
    print(f"wrote {len(graphs)} graphs to {args.output}")


if __name__ == "__main__":
    main()
