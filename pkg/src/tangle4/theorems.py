"""End-to-end drivers: reduction to 3-connected graphs, internally
4-connected witnesses for 4-tangles, star decompositions of quasi
4-connected graphs, and the cross-seed uniqueness check for large torsos."""

from dataclasses import dataclass, field
from itertools import combinations

from .chops import (_is_k33, decomposition, faithful_torso_map, greedy_maximal_3chop,
                    torso_kind)
from .connectivity import is_claw_free, is_internally_4connected, is_quasi_4connected
from .errors import (InvalidTangle, NoSuchTorso, NotApplicable, NotQuasi4Connected, PreconditionUnmet,
                     TheoremViolation, UniversalityViolation)
from .graph import (Graph, are_isomorphic, block_masks, components, induced_subgraph, is_connected,
                    is_cycle_graph, is_k_connected, members, neighborhood, vset)
from .minors import MinorMap, compose, identity_map, is_delta_minor_map, standard_cube_minor, validate_model
from .separations import (OrientedSeparation, bag, canonical, is_nested, is_proper, order,
                          proper_separations, sort_key, splitting_stars, torso)
from .tangles import (check_tangle, enumerate_tangles, includes_star, internal_tangle, is_cubic_tangle,
                      lift_tangle, tangle_direction)


def _matching_tangle(m, t):
    for cand in enumerate_tangles(m.codomain, t.k):
        if lift_tangle(m, cand) == t:
            return cand
    return None


def block_map(g, block):
    """Map ``g`` onto ``g[block]``: each block vertex absorbs the pieces
    of ``g - block`` hanging off it."""
    h = induced_subgraph(g, block)
    fibers = [1 << v for v in members(block)]
    index = {v: i for i, v in enumerate(members(block))}
    for c in components(g, block):
        attach = neighborhood(g, c) & block
        if not attach:
            continue  # another connected component of g
        if attach.bit_count() != 1:
            raise ValueError("not a block: a piece attaches at two vertices")
        fibers[index[members(attach)[0]]] |= c
    return MinorMap(g, h, tuple(fibers))


def two_separation_torso_map(g, star):
    """Map a 2-connected ``g`` onto the torso of a star of 2-separations by
    contracting, for each element, a path through its far side onto one
    separator vertex."""
    target = bag(g, star)
    fiber = {v: 1 << v for v in members(target)}
    for el in sorted(star):
        far = el.small & ~el.big
        x, y = members(el.separator)
        route = _path_through(g, x, y, far)
        if route is None:
            raise NoSuchTorso("far side does not connect its separator")
        fiber[x] |= route
    codomain = torso(g, star)
    m = MinorMap(g, codomain, tuple(fiber[v] for v in members(target)))
    if not validate_model(m):
        raise NoSuchTorso("contraction map onto the torso is invalid")
    return m


def _path_through(g, x, y, inner):
    # shortest x-y path with all inner vertices in ``inner``; returns inner vertex mask
    prev = {x: None}
    frontier = [x]
    while frontier:
        nxt = []
        for u in frontier:
            for w in members(g.adj[u] & (inner | 1 << y)):
                if w in prev or (u == x and w == y):
                    continue
                prev[w] = u
                if w == y:
                    out = 0
                    z = prev[y]
                    while z != x:
                        out |= 1 << z
                        z = prev[z]
                    return out
                nxt.append(w)
        frontier = nxt
    return None


def reduce_to_3connected(g, t):
    """``(h, m, t2)`` with ``h`` 3-connected, ``m: g >= h`` and
    ``lift(m, t2) == t``."""
    if t.k < 3:
        raise ValueError("reduction needs a tangle of order at least 3")
    if is_k_connected(g, 3):
        return g, identity_map(g), t
    t3 = t.restrict(3)

    m1 = identity_map(g)
    if not is_k_connected(g, 2):
        found = None
        for block in block_masks(g):
            if block.bit_count() < 3:
                continue
            cuts = [v for v in members(block) if len(components(g, 1 << v)) > len(components(g))]
            if all(tangle_direction(g, t3, 1 << v) & block for v in cuts):
                found = block
                break
        if found is None:
            raise NoSuchTorso("no block carries the tangle")
        m1 = block_map(g, found)
    h1 = m1.codomain
    t1 = _matching_tangle(m1, t)
    if t1 is None:
        raise NoSuchTorso("block tangle does not lift to the input tangle")
    if is_k_connected(h1, 3):
        return h1, m1, t1

    nested = []
    for s in proper_separations(h1, 2):
        if all(is_nested(s, r) for r in nested):
            nested.append(s)
    for star in splitting_stars(h1, nested):
        if not includes_star(t1, star):
            continue
        if bag(h1, star).bit_count() < 4:
            continue
        m2 = two_separation_torso_map(h1, star)
        if not is_k_connected(m2.codomain, 3):
            continue
        m = compose(m1, m2)
        t2 = _matching_tangle(m, t)
        if t2 is not None:
            return m.codomain, m, t2
    raise NoSuchTorso("the tangle includes no splitting star with a 3-connected torso")


@dataclass
class MainWitness:
    h: Graph
    map: MinorMap
    tangle_check: bool
    bag_size: int
    via_cube: bool
    chop: tuple = field(default=(), repr=False)


def main_witness(g, t, seed=0):
    """An internally 4-connected minor ``h`` of ``g`` whose unique 4-tangle lifts to ``t``."""
    if t.k != 4 or not check_tangle(g, 4, t):
        raise InvalidTangle("input is not a 4-tangle of the graph")
    h1, m1, t1 = reduce_to_3connected(g, t)
    if _is_k33(h1):
        raise InvalidTangle("K3,3 has no 4-tangle")
    chop = greedy_maximal_3chop(h1, seed)
    homes = [st for st in splitting_stars(h1, chop.separations) if includes_star(t1, st)]
    if len(homes) != 1:
        raise TheoremViolation(f"tangle includes {len(homes)} splitting stars")
    star = homes[0]
    size = bag(h1, star).bit_count()
    if size >= 5:
        m2 = faithful_torso_map(h1, chop, star)
    elif size == 4:
        m2 = standard_cube_minor(h1, bag(h1, star))
    else:
        raise TheoremViolation(f"tangle lives at a bag of size {size}")
    h = m2.codomain
    m = compose(m1, m2)
    ok = is_internally_4connected(h) and lift_tangle(m, internal_tangle(h)) == t
    if not ok:
        raise TheoremViolation("witness tangle does not lift to the input tangle")
    return MainWitness(h, m, ok, size, size == 4, tuple(chop.separations))


@dataclass
class StarDecomposition:
    center: int
    center_torso: Graph
    center_kind: str
    leaves: list
    adhesions: list
    star: frozenset = frozenset()

    @property
    def adhesion(self):
        return max((a.bit_count() for a in self.adhesions), default=0)


def quasi4_star_decomposition(g, seed=0):
    """A star-decomposition of adhesion three with leaf bags of size four."""
    if not is_quasi_4connected(g):
        raise NotQuasi4Connected("graph is not quasi 4-connected")
    proper = proper_separations(g, 3)
    if not proper:
        return StarDecomposition(g.full, g, torso_kind(g), [], [])
    for s in proper:
        if s.a.bit_count() == s.b.bit_count():
            # two bags; either may serve as the centre
            el = OrientedSeparation(s.b, s.a)
            t = torso(g, [el])
            return StarDecomposition(s.a, t, torso_kind(t), [s.b], [s.a & s.b], frozenset([el]))
    if _is_k33(g):
        # every proper 3-separation of K3,3 has a claw side, so maximal chops
        # are empty; use the three claws around one class instead
        cls = _k33_class(g)
        star = frozenset(OrientedSeparation(cls | 1 << v, g.full & ~(1 << v)) for v in members(g.full & ~cls))
    else:
        chop = greedy_maximal_3chop(g, seed)
        star = set()
        for s in chop.separations:
            for o in s.orientations():
                if o.small.bit_count() == 4:
                    star.add(o)
        star = frozenset(star)
    t = torso(g, star)
    return StarDecomposition(bag(g, star), t, torso_kind(t), [o.small for o in sorted(star)],
                             [o.separator for o in sorted(star)], star)


def _k33_class(g):
    side = 1
    for v in members(g.adj[0]):
        side |= g.adj[v]
    return side & g.full & ~g.adj[0]


@dataclass
class UniversalityReport:
    seeds: list
    n_tangles: int
    cubic: dict  # tangle index -> bag size per seed
    torsos: dict  # tangle index -> torso vertex counts per seed


def universality_check(g, trials=3, seed=0):
    """Check that, for every non-cubic 4-tangle, the torsos of the stars it
    includes in maximal chops from different seeds are isomorphic and
    internally 4-connected."""
    if trials < 2:
        raise ValueError("need at least two trials")
    if not is_k_connected(g, 3):
        raise NotApplicable("graph is not 3-connected")
    tangles = enumerate_tangles(g, 4)
    seeds = [seed + i for i in range(trials)]
    chops = [greedy_maximal_3chop(g, s) for s in seeds]
    stars = [splitting_stars(g, c.separations) for c in chops]
    cubic, torsos = {}, {}
    for i, t in enumerate(tangles):
        homes = []
        for st in stars:
            mine = [x for x in st if includes_star(t, x)]
            if len(mine) != 1:
                raise UniversalityViolation(f"tangle {i} includes {len(mine)} stars")
            homes.append(mine[0])
        if is_cubic_tangle(g, t) is not None:
            cubic[i] = [bag(g, x).bit_count() for x in homes]
            continue
        ts = [torso(g, x) for x in homes]
        for j, x in enumerate(ts):
            if not is_internally_4connected(x):
                raise UniversalityViolation(f"tangle {i}, seed {seeds[j]}: torso not internally 4-connected; "
                                            f"chop {list(chops[j].separations)}")
        for a, b in combinations(range(len(ts)), 2):
            if are_isomorphic(ts[a], ts[b]) is None:
                raise UniversalityViolation(
                    f"tangle {i}: torsos for seeds {seeds[a]} and {seeds[b]} differ; "
                    f"chops {list(chops[a].separations)} and {list(chops[b].separations)}")
        torsos[i] = [x.n for x in ts]
    return UniversalityReport(seeds, len(tangles), cubic, torsos)


def branch_set_meets_big_side(m, t, s):
    """Whether every branch set of ``m`` meets the big side of ``s``."""
    h = m.codomain
    s = OrientedSeparation(*s)
    if not is_delta_minor_map(m) or not is_internally_4connected(h):
        raise PreconditionUnmet("need a delta-minor-map onto an internally 4-connected graph")
    if lift_tangle(m, internal_tangle(h)) != t:
        raise PreconditionUnmet("the map does not carry the tangle")
    if s not in t.oriented or order(s) != 3 or not is_proper(s):
        raise PreconditionUnmet("need a proper 3-separation in the tangle")
    if not is_claw_free(m.domain, canonical(*s)):
        raise PreconditionUnmet("separation has a claw side")
    return all(f & s.big for f in m.fibers)


def deletion_leaves_cycle(g, u, v):
    """Whether ``g - u - v`` is a cycle."""
    rest = g.full & ~(1 << u | 1 << v)
    return is_cycle_graph(induced_subgraph(g, rest))
