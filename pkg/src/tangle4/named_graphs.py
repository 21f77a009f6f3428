"""Small named graphs and the fixtures used throughout the tests."""

from itertools import combinations

from .graph import Graph


def complete(n):
    return Graph(n, frozenset(combinations(range(n), 2)))


def complete_bipartite(p, q):
    return Graph(p + q, frozenset((i, p + j) for i in range(p) for j in range(q)))


def cycle(n):
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def path(n):
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def claw():
    return complete_bipartite(1, 3)


def cube():
    """The 3-cube on ids 0..7; ``u ~ v`` when the ids differ in one bit."""
    return Graph(8, frozenset((v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)))


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, frozenset(outer + spokes + inner))


def prism():
    """Two triangles 0,1,2 and 3,4,5 joined by the matching i ~ i + 3."""
    return Graph(6, frozenset([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]))


def two_cube_gadget():
    """Two cubes on 0..7 and 8..15 joined by the matching 1-9, 2-10, 4-12."""
    edges = set(cube().edges)
    edges |= {(u + 8, v + 8) for u, v in cube().edges}
    edges |= {(1, 9), (2, 10), (4, 12)}
    return Graph(16, frozenset(edges))


def two_cubes_sharing_edge():
    """Two cubes glued along the edge 0-1 (2-connected, not 3-connected)."""
    second = {0: 0, 1: 1}
    nxt = 8
    for v in range(2, 8):
        second[v] = nxt
        nxt += 1
    edges = set(cube().edges) | {tuple(sorted((second[u], second[v]))) for u, v in cube().edges}
    return Graph(14, frozenset(edges))


def cube_with_pendant_block():
    """A cube with a K4 hanging off vertex 0 (cut vertex 0)."""
    edges = set(cube().edges) | {(0, 8), (0, 9), (0, 10), (8, 9), (8, 10), (9, 10)}
    return Graph(11, frozenset(edges))


def blown_up_cube(sizes):
    """The bipartite cube (classes 0..3 and 4..7, ``i ~ j + 4`` for ``i != j``) with
    class-A vertex ``i`` replaced by a clique of ``sizes[i]`` vertices, each
    joined to the three class-B neighbours of ``i``.

    Ids: B vertices are 0..3 (for 4..7 of the cube); clique vertices follow.
    """
    edges = set()
    nxt = 4
    for i, size in enumerate(sizes):
        clique = list(range(nxt, nxt + size))
        nxt += size
        edges |= set(combinations(clique, 2))
        for v in clique:
            for j in range(4):
                if j != i:
                    edges.add((j, v))
    return Graph(nxt, frozenset(edges))


def chain_graph():
    """A K10 on 0..9 with degree-three vertices 10, 11, 12 attached to
    {0,1,2}, {1,2,3}, {2,3,4}; every edge inside one of these neighbourhoods
    is deleted except 0-1."""
    nbhds = [(0, 1, 2), (1, 2, 3), (2, 3, 4)]
    edges = set(combinations(range(10), 2))
    for nb in nbhds:
        edges -= set(combinations(nb, 2))
    edges.add((0, 1))
    for v, nb in zip((10, 11, 12), nbhds):
        edges |= {(u, v) for u in nb}
    return Graph(13, frozenset(edges))


CHAIN_ATTACHED = (10, 11, 12)


def donut_graph(size=6):
    """A clique ``d_0..d_5`` (ids 0..5), outer vertices ``o_j`` (6..11) with
    ``o_j ~ d_j``, and degree-three vertices ``b_i`` (12..17) adjacent to
    ``o_i, o_{i+1}, o_{i+2}``.  ``size`` is the clique size (at least 6)."""
    if size < 6:
        raise ValueError("the donut needs at least six clique vertices")
    d = list(range(size))
    o = [size + j for j in range(6)]
    b = [size + 6 + i for i in range(6)]
    edges = set(combinations(d, 2))
    edges |= {(d[j], o[j]) for j in range(6)}
    for i in range(6):
        edges |= {(o[(i + t) % 6], b[i]) for t in range(3)}
    return Graph(size + 12, frozenset(edges))


def quasi_counterexample():
    """A K6 with two degree-three vertices 6 and 7 both attached to {0,1,2}:
    3-connected, not quasi 4-connected, yet it has a star-decomposition with
    leaf bags of size four and a 4-connected central torso."""
    edges = set(combinations(range(6), 2)) | {(u, v) for v in (6, 7) for u in (0, 1, 2)}
    return Graph(8, frozenset(edges))


NAMED = {
    "K3": lambda: complete(3),
    "K4": lambda: complete(4),
    "K5": lambda: complete(5),
    "K6": lambda: complete(6),
    "K3,3": lambda: complete_bipartite(3, 3),
    "cube": cube,
    "petersen": petersen,
    "prism": prism,
    "two_cube_gadget": two_cube_gadget,
    "blown_up_cube": lambda: blown_up_cube((3, 1, 1, 1)),
    "chain": chain_graph,
    "donut": donut_graph,
}
