"""Write the connected-graph corpus (orders 1..7) as graph6 files.

Uses the networkx graph atlas, which lists every graph on up to seven
vertices up to isomorphism.  Output: tests/data/connected_n{1..7}.g6,
plus tests/data/trees_n8.g6 (all 23 trees on eight vertices).
"""

import pathlib

import networkx as nx

OUT = pathlib.Path(__file__).resolve().parents[1] / "tests" / "data"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    by_order = {}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or not nx.is_connected(g):
            continue
        by_order.setdefault(n, []).append(nx.to_graph6_bytes(g, header=False).decode().strip())
    for n, lines in sorted(by_order.items()):
        (OUT / f"connected_n{n}.g6").write_text("\n".join(lines) + "\n")
        print(n, len(lines))
    trees = [nx.to_graph6_bytes(t, header=False).decode().strip() for t in nx.nonisomorphic_trees(8)]
    (OUT / "trees_n8.g6").write_text("\n".join(trees) + "\n")
    print("trees 8", len(trees))


if __name__ == "__main__":
    main()
