"""Two spectral lower bounds on the chromatic number, and when they differ.

The Laplacian bound chi >= 1 + 2|E| / (n lambda_max(L) - 2|E|) coincides with
the Hoffman bound 1 - theta_max/theta_min on every regular graph, but the two
are incomparable in general.  The showcase: the complete graph on 100
vertices minus one edge, where the Laplacian bound certifies chi >= 99 (the
true chromatic number) while Hoffman only reaches 51.

Run:  python demos/chromatic_bounds.py
"""

import numpy as np

from kcut import Graph, chromatic_lower_bound, hoffman_bound, named_graph


def show(g):
    lap = chromatic_lower_bound(g)
    hof = hoffman_bound(g)
    print(f"{g.name or 'graph':24s}  laplacian {lap.value:9.4f} -> chi >= {lap.metadata['ceiling']:3d}"
          f"   hoffman {hof.value:9.4f} -> chi >= {hof.metadata['ceiling']:3d}")


if __name__ == "__main__":
    print("regular graphs: the two bounds agree exactly")
    for g in [named_graph("petersen"), named_graph("cycle", (7,)),
              named_graph("kneser", (6, 2)), named_graph("coxeter"),
              named_graph("hamming", (3, 3, 3))]:
        show(g)

    print("\nnon-regular: K_100 minus an edge (chromatic number is 99)")
    W = 1.0 - np.eye(100)
    W[0, 1] = W[1, 0] = 0.0
    show(Graph(n=100, weights=W, name="K_100 minus edge"))

    print("\n... and the other direction: a star, where the Hoffman value is larger")
    W = np.zeros((8, 8))
    W[0, 1:] = W[1:, 0] = 1.0
    show(Graph(n=8, weights=W, name="star K_{1,7}"))
