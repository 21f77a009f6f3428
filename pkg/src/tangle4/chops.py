"""Greedy maximal 3-chops and the tree-decompositions they define.

A 3-chop is a nested set of proper 3-separations that can be listed so
that every member is claw-free or shares two separator vertices with an
earlier member.  Each node of the induced tree carries its torso together
with a faithful minor-map from the whole graph onto that torso.
"""

import random
from dataclasses import dataclass, field
from itertools import combinations

from .connectivity import is_claw_free, is_internally_4connected
from .errors import ConstructionFailure, NoDistinguisher, NotThreeConnected, TheoremViolation
from .graph import Graph, are_isomorphic, disjoint_paths, find_cycle_in, is_k_connected, members, vset
from .minors import MinorMap, is_cubic, is_delta_minor_map, is_faithful, standard_cube_minor, validate_model
from .named_graphs import complete_bipartite
from .separations import (bag, canonical, interlaces, is_nested, is_proper, leq, order, proper_separations,
                          sort_key, splitting_stars, torso, tree_decomposition)
from .tangles import efficient_distinguishers, enumerate_tangles, includes_star, internal_tangle, lift_tangle


@dataclass(frozen=True)
class Chop:
    """Separations listed in a claw-freeing order."""

    separations: tuple = ()

    @property
    def members(self):
        return frozenset(self.separations)

    def __len__(self):
        return len(self.separations)

    def __contains__(self, s):
        return canonical(s[0], s[1]) in self.members


def _shares_two(s, t):
    return (s.a & s.b & t.a & t.b).bit_count() >= 2


def claw_freeing_order(g, seps):
    """A claw-freeing enumeration of ``seps`` or None.

    Activates every claw-free member, then repeatedly every member whose
    separator meets an active separator in two vertices.  Activation is
    monotone, so this finds an order whenever one exists.
    """
    pending = sorted({canonical(s[0], s[1]) for s in seps}, key=sort_key)
    for s in pending:
        if order(s) != 3 or not is_proper(s):
            raise ValueError("claw-freeing orders are defined for proper 3-separations")
    result = [s for s in pending if is_claw_free(g, s)]
    pending = [s for s in pending if s not in set(result)]
    while pending:
        step = [s for s in pending if any(_shares_two(s, t) for t in result)]
        if not step:
            return None
        result.extend(step)
        pending = [s for s in pending if s not in set(step)]
    return result


def can_extend(g, chop, s):
    s = canonical(s[0], s[1])
    if s in chop.members or order(s) != 3 or not is_proper(s):
        return False
    if not all(is_nested(s, t) for t in chop.separations):
        return False
    return any(_shares_two(s, t) for t in chop.separations) or is_claw_free(g, s)


def greedy_maximal_3chop(g, seed=0):
    """A maximal 3-chop built by scanning candidates in a seeded random order."""
    if not is_k_connected(g, 3):
        raise NotThreeConnected("greedy chops need a 3-connected graph")
    candidates = proper_separations(g, 3)
    random.Random(seed).shuffle(candidates)
    chop = Chop()
    grew = True
    while grew:
        grew = False
        for s in candidates:
            if can_extend(g, chop, s):
                chop = Chop(chop.separations + (s,))
                grew = True
    assert not any(can_extend(g, chop, s) for s in candidates)
    return chop


def is_maximal(g, chop):
    return not any(can_extend(g, chop, s) for s in proper_separations(g, 3))


def faithful_torso_map(g, chop, star):
    """A faithful minor-map from ``g`` onto the torso of ``star``.

    Separations are cut off one at a time in claw-freeing order.  Cutting
    ``{A, B}`` with the torso inside ``B`` replaces ``G`` by ``G[B]`` plus a
    triangle on ``X = A & B``: a cycle in ``G[A]`` and three disjoint paths
    from ``X`` to it give each ``x`` in ``X`` a branch set (its path plus an
    arc of the cycle) and the arcs realise the triangle.
    """
    target = bag(g, star)
    n = g.n
    alive = g.full
    adj = list(g.adj)
    fiber = [1 << v for v in range(n)]
    # orient every member away from the star: (C, D) <= some star element
    pending = []
    for s in chop.separations:
        for o in s.orientations():
            if any(leq(o, el) for el in star):
                pending.append(o)
                break
        else:
            raise ConstructionFailure("star does not split the chop")
    while True:
        pending = [o for o in pending if o.small & alive & ~o.big]
        if not pending:
            break
        for o in pending:
            far = o.small & alive
            inner = _graph_on(n, adj, far)
            cycle = find_cycle_in(inner, far)
            if cycle is not None:
                break
        else:
            raise ConstructionFailure("no remaining chop member has a cycle on its far side")
        pending.remove(o)
        x = far & o.big
        if x.bit_count() != 3:
            raise ConstructionFailure("chop member lost its separator")
        cycle = _orient_cycle(cycle)
        paths = disjoint_paths(inner, x, vset(cycle), 3)
        if paths is None:
            raise ConstructionFailure("fewer than three disjoint paths to the cycle")
        for owner, vertices in _branch_sets(cycle, paths):
            f = 0
            for v in vertices:
                f |= fiber[v]
            fiber[owner] = f
        alive &= ~(far & ~x)
        for v in range(n):
            adj[v] &= alive
        for u, v in combinations(members(x), 2):
            adj[u] |= 1 << v
            adj[v] |= 1 << u

    codomain = torso(g, star)
    if alive != target or _graph_on(n, adj, alive).edges != _ambient_edges(codomain, target):
        raise ConstructionFailure("cutting the chop did not produce the torso")
    m = MinorMap(g, codomain, tuple(fiber[v] for v in members(target)))
    if not (validate_model(m) and is_faithful(m) and is_delta_minor_map(m)):
        raise ConstructionFailure("constructed map is not a faithful delta-minor-map")
    return m


def _graph_on(n, adj, mask):
    edges = set()
    for u in members(mask):
        for v in members(adj[u] & mask):
            if u < v:
                edges.add((u, v))
    return Graph(n, frozenset(edges))


def _ambient_edges(t, bag_mask):
    ids = members(bag_mask)
    return frozenset((ids[u], ids[v]) for u, v in t.edges)


def _orient_cycle(cycle):
    # start at the smallest id and walk towards its smaller neighbour
    i = cycle.index(min(cycle))
    cycle = cycle[i:] + cycle[:i]
    if cycle[-1] < cycle[1]:
        cycle = [cycle[0]] + cycle[:0:-1]
    return cycle


def _branch_sets(cycle, paths):
    """Split the cycle at the path ends; each path owns the arc starting at its end."""
    pos = {v: i for i, v in enumerate(cycle)}
    ends = sorted((pos[p[-1]], p) for p in paths)
    out = []
    for j, (start, p) in enumerate(ends):
        stop = ends[(j + 1) % len(ends)][0]
        arc = []
        i = start
        while True:
            arc.append(cycle[i])
            i = (i + 1) % len(cycle)
            if i == stop:
                break
        out.append((p[0], p + arc))
    return out


def torso_kind(t):
    """``internally_4_connected``, ``K4``, ``K3`` or ``other``."""
    complete = len(t.edges) == t.n * (t.n - 1) // 2
    if complete and t.n == 4:
        return "K4"
    if complete and t.n == 3:
        return "K3"
    if is_internally_4connected(t):
        return "internally_4_connected"
    return "other"


@dataclass(frozen=True)
class Node:
    index: int
    star: frozenset
    bag: int
    torso: Graph
    minor_map: MinorMap = field(repr=False)
    kind: str


@dataclass(frozen=True)
class Decomposition:
    graph: Graph
    chop: Chop
    nodes: tuple
    edges: tuple  # (node, node, separation)

    def node_of(self, tangle):
        """Nodes whose star the tangle includes."""
        return [nd for nd in self.nodes if includes_star(tangle, nd.star)]


def decomposition(g, chop):
    stars, edges = tree_decomposition(g, chop.separations)
    nodes = []
    for i, star in enumerate(stars):
        t = torso(g, star)
        nodes.append(Node(i, star, bag(g, star), t, faithful_torso_map(g, chop, star), torso_kind(t)))
    return Decomposition(g, chop, tuple(nodes), tuple(edges))


def add_distinguisher(g, nested, t1, t2):
    """A claw-free proper 3-separation nested with ``nested`` that
    efficiently distinguishes ``t1`` and ``t2`` and interlaces the
    splitting star both include."""
    if t1 == t2:
        raise NoDistinguisher("the tangles are equal")
    nested = sorted({canonical(s[0], s[1]) for s in nested}, key=sort_key)
    shared = [st for st in splitting_stars(g, nested) if includes_star(t1, st) and includes_star(t2, st)]
    if not shared:
        raise NoDistinguisher("the tangles include different splitting stars")
    star = shared[0]
    unoriented = [o.unoriented() for o in star]
    candidates = efficient_distinguishers(t1, t2)
    if not candidates:
        raise NoDistinguisher("no separation distinguishes the tangles")

    def crossings(s):
        return sum(1 for t in unoriented if not is_nested(s, t))

    best = min(candidates, key=lambda s: (crossings(s), sort_key(s)))
    if crossings(best) or not is_proper(best) or order(best) != 3:
        raise TheoremViolation(f"best distinguisher {best} crosses the shared star")
    if not is_claw_free(g, best):
        raise TheoremViolation(f"distinguisher {best} has a claw side")
    if not interlaces(best, star) or not all(is_nested(best, t) for t in nested):
        raise TheoremViolation(f"distinguisher {best} does not interlace the star")
    return best


def distinguish_all(g, nested, tangles):
    """Extend ``nested`` by distinguishers until all pairs of ``tangles`` are
    efficiently distinguished by a member."""
    nested = {canonical(s[0], s[1]) for s in nested}
    while True:
        for t1, t2 in combinations(tangles, 2):
            if not set(efficient_distinguishers(t1, t2)) & nested:
                stars = splitting_stars(g, nested)
                if any(includes_star(t1, st) and includes_star(t2, st) for st in stars):
                    nested.add(add_distinguisher(g, nested, t1, t2))
                    break
        else:
            return sorted(nested, key=sort_key)


@dataclass
class NodeReport:
    index: int
    bag: list
    bag_size: int
    kind: str
    tangles: list
    cubic: bool = False


@dataclass
class ChopReport:
    n_tangles: int
    chop: list
    nodes: list
    checked: list


def _is_k33(g):
    return g.n == 6 and len(g.edges) == 9 and are_isomorphic(g, complete_bipartite(3, 3)) is not None


def verify_chop_theorem(g, chop, tangles=None):
    """Check the four properties of maximal 3-chops against brute-force tangles.

    Raises :class:`TheoremViolation` on the first failing check.
    """
    def fail(item, detail):
        raise TheoremViolation(f"({item}) {detail}")

    if not is_maximal(g, chop):
        fail("pre", "chop is not maximal")
    if claw_freeing_order(g, chop.separations) is None:
        fail("pre", "chop is not claw-freeable")
    if tangles is None:
        tangles = enumerate_tangles(g, 4)
    try:
        dec = decomposition(g, chop)
    except ConstructionFailure as exc:
        fail("ii", f"torso map construction failed: {exc}")

    home = []
    for i, t in enumerate(tangles):
        nodes = dec.node_of(t)
        if len(nodes) != 1:
            fail("i", f"tangle {i} includes {len(nodes)} splitting stars")
        home.append(nodes[0].index)
    if len(set(home)) != len(home):
        fail("i", "two tangles include the same splitting star")
    for (i, t1), (j, t2) in combinations(enumerate(tangles), 2):
        if not set(efficient_distinguishers(t1, t2)) & chop.members:
            fail("i", f"tangles {i} and {j} are not efficiently distinguished by the chop")

    k33 = _is_k33(g)
    reports = []
    counted = 0
    for nd in dec.nodes:
        m = nd.minor_map
        if not (validate_model(m) and is_faithful(m) and is_delta_minor_map(m)):
            fail("ii", f"torso map of node {nd.index} is not a faithful delta-minor-map")
        mine = [i for i, h in enumerate(home) if h == nd.index]
        size = nd.bag.bit_count()
        rep = NodeReport(nd.index, members(nd.bag), size, nd.kind, mine)
        if size <= 4:
            cubic = size == 4 and is_cubic(g, nd.bag) is not None
            rep.cubic = cubic
            if bool(mine) != cubic:
                fail("iii", f"node {nd.index}: included by a tangle={bool(mine)}, cubic={cubic}")
            if cubic:
                counted += 1
                cube_map = standard_cube_minor(g, nd.bag)
                lifted = lift_tangle(cube_map, internal_tangle(cube_map.codomain))
                if lifted != tangles[mine[0]]:
                    fail("iii", f"node {nd.index}: cube lift differs from the tangle")
        elif not k33:
            if nd.kind != "internally_4_connected":
                fail("iv", f"node {nd.index}: torso with {size} vertices is not internally 4-connected")
            counted += 1
            lifted = lift_tangle(m, internal_tangle(nd.torso))
            if len(mine) != 1 or lifted != tangles[mine[0]]:
                fail("iv", f"node {nd.index}: torso tangle does not lift to the tangle including the star")
        reports.append(rep)
    if counted != len(tangles):
        fail("count", f"{len(tangles)} tangles but {counted} tangle-carrying nodes")
    return ChopReport(len(tangles), [(s.a, s.b) for s in chop.separations], reports,
                      ["maximal", "i", "ii", "iii", "iv", "count"])
