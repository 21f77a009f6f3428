"""Regenerate the graph6 corpora under tests/data.

* three_connected_<n>.g6: every 3-connected graph on n = 4..8 vertices up
  to isomorphism.  n <= 7 comes from the networkx graph atlas; n = 8 adds a
  vertex of degree >= 3 to every 2-connected 7-vertex graph (deleting any
  vertex of a 3-connected graph leaves it 2-connected) and removes
  isomorphic duplicates.
* random_3connected.g6: 200 seeded random 3-connected graphs on 6..10 vertices.

Usage: python3 scripts/make_corpus.py [outdir]
"""

import random
import sys
from itertools import combinations
from pathlib import Path

import networkx as nx

from tangle4.graph import Graph, is_k_connected
from tangle4.io import to_graph6

EXPECTED = {4: 1, 5: 3, 6: 17, 7: 136, 8: 2388}


def _ours(h):
    h = nx.convert_node_labels_to_integers(h)
    return Graph.from_edges(h.edges(), n=h.number_of_nodes())


def atlas_graphs(n):
    return [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n]


def three_connected(n):
    if n <= 7:
        return [h for h in atlas_graphs(n) if is_k_connected(_ours(h), 3)]
    base = [h for h in atlas_graphs(n - 1) if nx.is_biconnected(h)]
    buckets = {}
    for h in base:
        for size in range(3, n):
            for nbrs in combinations(range(n - 1), size):
                cand = h.copy()
                cand.add_edges_from((n - 1, v) for v in nbrs)
                if not is_k_connected(_ours(cand), 3):
                    continue
                key = (cand.number_of_edges(), nx.weisfeiler_lehman_graph_hash(cand, iterations=3))
                seen = buckets.setdefault(key, [])
                if not any(nx.is_isomorphic(cand, other) for other in seen):
                    seen.append(cand)
    return [h for group in buckets.values() for h in group]


def random_corpus(count=200, seed=20240601):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(6, 10)
        p = rng.uniform(0.35, 0.8)
        h = nx.gnp_random_graph(n, p, seed=rng.randrange(2**32))
        g = _ours(h)
        if is_k_connected(g, 3):
            out.append(g)
    return out


def main(outdir=None):
    outdir = Path(outdir or Path(__file__).resolve().parent.parent / "tests" / "data")
    outdir.mkdir(parents=True, exist_ok=True)
    for n, want in EXPECTED.items():
        graphs = sorted(to_graph6(_ours(h)) for h in three_connected(n))
        if len(graphs) != want:
            raise SystemExit(f"n={n}: generated {len(graphs)} graphs, expected {want}")
        (outdir / f"three_connected_{n}.g6").write_text("\n".join(graphs) + "\n")
        print(f"n={n}: {len(graphs)} graphs")
    rand = [to_graph6(g) for g in random_corpus()]
    (outdir / "random_3connected.g6").write_text("\n".join(rand) + "\n")
    print(f"random: {len(rand)} graphs")


if __name__ == "__main__":
    main(*sys.argv[1:])
