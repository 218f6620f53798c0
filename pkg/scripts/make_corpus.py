"""Write the connected graphs of a given order from the networkx atlas as graph6.

    python scripts/make_corpus.py 7 > src/genpos/data/connected7.g6
"""

import sys

import networkx as nx


def main(order: int) -> None:
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == order and nx.is_connected(g):
            sys.stdout.write(nx.to_graph6_bytes(g, header=False).decode("ascii"))


if __name__ == "__main__":
    main(int(sys.argv[1]))
