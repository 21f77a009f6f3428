import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from oracles import is_k_connected_bruteforce
from tangle4.graph import (Graph, are_isomorphic, block_masks, blocks, components, disjoint_paths,
                           find_cycle_in, induced_subgraph, is_k_connected, members, neighborhood,
                           relabel, separates, vset)
from tangle4.named_graphs import complete, complete_bipartite, cube, path, prism, claw


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(chosen, n=n)


def test_graph_rejects_loops_and_bad_ids():
    with pytest.raises(ValueError):
        Graph.from_edges([(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges([(0, 3)], n=2)


def test_components_cube_neighbourhood():
    g = cube()
    comps = components(g, g.adj[0])
    assert sorted(c.bit_count() for c in comps) == [1, 4]
    assert 1 in comps


def test_components_trivial_cases():
    assert components(cube(), 0) == [cube().full]
    comps = components(complete(5), vset([0, 2, 4]))
    assert comps == [vset([1, 3])]
    assert components(complete(4), complete(4).full) == []


def test_neighborhood_examples():
    g = cube()
    assert neighborhood(g, 1) == g.adj[0]
    assert neighborhood(g, g.full) == 0
    k33 = complete_bipartite(3, 3)
    assert neighborhood(k33, 1) == vset([3, 4, 5])


def test_disjoint_paths_examples():
    assert disjoint_paths(complete(5), vset([0, 1, 2]), vset([3, 4]), 3) is None
    g = cube()
    paths = disjoint_paths(g, g.adj[0], g.adj[7], 3)
    assert paths is not None and len(paths) == 3
    assert disjoint_paths(g, 1 << 5, 1 << 5, 1) == [[5]]


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8), st.data())
def test_menger_consistency(g, data):
    s = vset(data.draw(st.sets(st.integers(0, g.n - 1), min_size=1)))
    t = vset(data.draw(st.sets(st.integers(0, g.n - 1), min_size=1)))
    k = data.draw(st.integers(1, 3))
    paths = disjoint_paths(g, s, t, k)
    # no (k-1)-set meets every S-T path  <=>  k disjoint paths
    blocked = False
    for size in range(k):
        for xs in combinations(range(g.n), size):
            x = vset(xs)
            reach = 0
            for c in components(g, x):
                if c & s and c & t:
                    reach = 1
            if not reach and not (s & t & ~x):
                blocked = True
    assert (paths is not None) == (not blocked)
    if paths:
        used = set()
        for p in paths:
            assert p[0] in members(s) and p[-1] in members(t)
            assert not used & set(p)
            used |= set(p)
            assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


def test_k_connectivity_examples():
    assert is_k_connected(complete(5), 4)
    assert is_k_connected(cube(), 3) and not is_k_connected(cube(), 4)
    assert is_k_connected(complete_bipartite(3, 3), 3)


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=8), st.integers(1, 4))
def test_k_connectivity_matches_bruteforce(g, k):
    assert is_k_connected(g, k) == is_k_connected_bruteforce(g.n, g.sorted_edges(), k)


def test_blocks_examples():
    bowtie = Graph.from_edges([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert sorted(b.n for b in blocks(bowtie)) == [3, 3]
    assert block_masks(cube()) == [cube().full]
    assert sorted(block_masks(path(3))) == [vset([0, 1]), vset([1, 2])]


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_blocks_match_networkx(g):
    h = nx.Graph(list(g.edges))
    h.add_nodes_from(range(g.n))
    theirs = {vset(c) for c in nx.biconnected_components(h)}
    theirs |= {1 << v for v in range(g.n) if h.degree(v) == 0}
    assert set(block_masks(g)) == theirs


def test_find_cycle_examples():
    cyc = find_cycle_in(complete(4))
    assert cyc is not None and len(cyc) == 3
    assert find_cycle_in(claw()) is None
    assert find_cycle_in(cube(), vset([0, 3, 5, 6])) is None


def test_isomorphism_examples():
    g = cube()
    perm = list(range(8))
    random.Random(3).shuffle(perm)
    assert are_isomorphic(g, relabel(g, perm)) is not None
    assert are_isomorphic(complete(5), complete_bipartite(3, 3)) is None
    assert are_isomorphic(complete_bipartite(3, 3), prism()) is None


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8), graphs(max_n=8))
def test_isomorphism_matches_networkx(g, h):
    iso = are_isomorphic(g, h)
    assert (iso is not None) == nx.is_isomorphic(_nx(g), _nx(h))
    if iso is not None:
        assert {tuple(sorted((iso[u], iso[v]))) for u, v in g.edges} == set(h.edges)


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_isomorphism_equivalence_on_corpus(corpus):
    rng = random.Random(0)
    for g in corpus[::7]:
        assert are_isomorphic(g, g) is not None
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert are_isomorphic(g, h) is not None and are_isomorphic(h, g) is not None


def test_induced_subgraph_keeps_labels():
    g = cube()
    h = induced_subgraph(g, vset([1, 3, 5, 7]))
    assert h.labels == (1, 3, 5, 7)
    assert h.n == 4 and len(h.edges) == 4


def test_separates():
    g = cube()
    assert separates(g, g.adj[0])
    assert not separates(g, vset([0, 1]))
