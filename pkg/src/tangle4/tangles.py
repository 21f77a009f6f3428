"""Tangles of order at most four.

A ``k``-tangle orients every separation of order ``< k`` so that no three
small sides (repetitions allowed) have induced subgraphs covering the graph.
By the direction lemma a tangle is determined by choosing, for every vertex
set ``X`` with ``|X| < k``, one component ``C(X)`` of ``G - X``: each
separation with separator ``X`` is oriented towards the side holding
``C(X)``.  Enumeration searches over these choices.
"""

from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .connectivity import is_claw, is_internally_4connected
from .errors import Inconsistent, NotForced, NotInternally4Connected
from .graph import components, induced_subgraph, members, neighborhood, vset
from .minors import cubic_sets, induced_separation
from .separations import OrientedSeparation, canonical, enumerate_separations, order, sort_key

MAX_ORDER = 4


@dataclass(frozen=True)
class Tangle:
    k: int
    oriented: frozenset
    n: int

    def __contains__(self, s):
        return OrientedSeparation(*s) in self.oriented

    def __len__(self):
        return len(self.oriented)

    def orientation_of(self, s):
        x, y = OrientedSeparation(s[0], s[1]), OrientedSeparation(s[1], s[0])
        if x in self.oriented:
            return x
        if y in self.oriented:
            return y
        return None

    def sorted_members(self):
        return sorted(self.oriented, key=lambda o: (sort_key(canonical(*o)), o))

    def restrict(self, k):
        """The ``k``-tangle formed by the members of order below ``k``."""
        return Tangle(k, frozenset(o for o in self.oriented if order(o) < k), self.n)


@dataclass(frozen=True)
class TangleCheck:
    ok: bool
    violations: tuple = ()

    def __bool__(self):
        return self.ok


def check_tangle(g, k, t):
    """Check totality, antisymmetry and the covering axiom.

    ``t`` is a :class:`Tangle` or any iterable of oriented separations.
    """
    members_ = set(t.oriented if isinstance(t, Tangle) else (OrientedSeparation(*o) for o in t))
    problems = []
    for o in sorted(members_):
        if order(o) >= k:
            problems.append(("order", o))
        elif not _is_sep(g, o):
            problems.append(("not a separation", o))
        elif o.inverse() in members_ and o.small < o.big:
            # reported once per pair
            problems.append(("both orientations", o))
    for s in enumerate_separations(g, k - 1):
        a, b = s.orientations()
        if a not in members_ and b not in members_:
            problems.append(("unoriented", s))
    smalls = [o.small for o in members_]
    cover = kernels.find_cover(smalls, g.adj, g.n)
    if cover is not None:
        problems.append(("cover", cover))
    return TangleCheck(not problems, tuple(problems))


def _is_sep(g, o):
    if o.small | o.big != g.full:
        return False
    for v in members(o.small & ~o.big):
        if g.adj[v] & ~o.small:
            return False
    return True


def enumerate_tangles(g, k):
    """All ``k``-tangles of ``g`` for ``1 <= k <= 4``, canonically sorted."""
    if not 1 <= k <= MAX_ORDER:
        raise ValueError(f"tangle order must be between 1 and {MAX_ORDER}")
    full, n = g.full, g.n
    forced, branching = [], []
    for size in range(k):
        for xs in combinations(range(n), size):
            x = vset(xs)
            comps = components(g, x)
            if not comps:
                return []
            if len(comps) == 1:
                forced.append(x)
            else:
                branching.append((x, comps))
    if kernels.find_cover(forced, g.adj, n) is not None:
        return []

    index = {x: i for i, (x, _) in enumerate(branching)}
    below = []
    for x, _ in branching:
        xs = members(x)
        subs = []
        for size in range(len(xs)):
            for ys in combinations(xs, size):
                j = index.get(vset(ys))
                if j is not None:
                    subs.append(j)
        below.append(subs)

    chosen = [0] * len(branching)
    tables = []

    def search(i, sides):
        if i == len(branching):
            tables.append(list(chosen))
            return
        x, comps = branching[i]
        allowed = full
        for j in below[i]:
            allowed &= chosen[j]
        for c in comps:
            # direction lemma: X <= Y forces C(Y) <= C(X)
            if c & ~allowed:
                continue
            side = full & ~c
            if kernels.find_cover_with(side, sides, g.adj, n) is not None:
                continue
            chosen[i] = c
            search(i + 1, sides + [side])
        chosen[i] = 0

    search(0, forced)

    out = []
    for table in tables:
        direction = {x: c for (x, _), c in zip(branching, table)}
        t = _from_directions(g, k, direction)
        assert check_tangle(g, k, t), "direction table produced a non-tangle"
        out.append(t)
    return sorted(out, key=lambda t: t.sorted_members())


def _from_directions(g, k, direction):
    full = g.full
    oriented = set()
    for s in enumerate_separations(g, k - 1):
        x = s.a & s.b
        c = direction.get(x, full & ~x)
        oriented.add(OrientedSeparation(s.a, s.b) if c & s.b & ~s.a else OrientedSeparation(s.b, s.a))
    return Tangle(k, frozenset(oriented), g.n)


def tangle_direction(g, t, x):
    """The component ``C(X)`` that ``t`` points every separation at ``X`` towards."""
    if x.bit_count() >= t.k:
        raise ValueError("separator too large for this tangle")
    comps = components(g, x)
    at_x = [o for o in t.oriented if o.separator == x]
    candidates = [c for c in comps if all(c & ~o.big == 0 for o in at_x)]
    if len(candidates) != 1:
        raise Inconsistent(f"{len(candidates)} candidate components at {members(x)}")
    return candidates[0]


def lift_tangle(m, t):
    """The lift to ``m.domain`` of a tangle ``t`` of ``m.codomain``."""
    g = m.domain
    oriented = set()
    for s in enumerate_separations(g, t.k - 1):
        for o in s.orientations():
            if induced_separation(m, o) in t.oriented:
                oriented.add(o)
    return Tangle(t.k, frozenset(oriented), g.n)


def orients_toward_big_side(g, s):
    """The orientation every 4-tangle must pick for a separation with a tiny or claw side."""
    if order(s) > 3:
        raise NotForced("only separations of order at most three are forced")
    for small, big in ((s[0], s[1]), (s[1], s[0])):
        if small.bit_count() == 3 or (small.bit_count() == 4 and is_claw(induced_subgraph(g, small))):
            return OrientedSeparation(small, big)
    raise NotForced("neither side has three vertices or induces a claw")


def internal_tangle(g):
    """The unique 4-tangle of an internally 4-connected graph: every side points to the larger one."""
    if not is_internally_4connected(g):
        raise NotInternally4Connected("graph is not internally 4-connected")
    oriented = set()
    for s in enumerate_separations(g, 3):
        na, nb = s.a.bit_count(), s.b.bit_count()
        assert na != nb, "separation with two equal sides in an internally 4-connected graph"
        oriented.add(OrientedSeparation(s.a, s.b) if na < nb else OrientedSeparation(s.b, s.a))
    return Tangle(4, frozenset(oriented), g.n)


def distinguishers(t1, t2):
    out = {o.unoriented() for o in t1.oriented if o.inverse() in t2.oriented and o.inverse() != o}
    return sorted(out, key=sort_key)


def efficient_distinguishers(t1, t2):
    dist = distinguishers(t1, t2)
    if not dist:
        return []
    low = min(order(s) for s in dist)
    return [s for s in dist if order(s) == low]


def includes_star(t, star):
    return all(OrientedSeparation(*s) in t.oriented for s in star)


def cubic_star(g, x):
    """For each 3-subset ``Y`` of cubic ``x``, the separation cutting off every
    component with neighbourhood ``Y``, oriented towards ``x``."""
    full = g.full
    by_nb = {}
    for c in components(g, x):
        by_nb[neighborhood(g, c)] = by_nb.get(neighborhood(g, c), 0) | c
    star = set()
    for ys in combinations(members(x), 3):
        y = vset(ys)
        u = by_nb.get(y, 0)
        star.add(OrientedSeparation(u | y, full & ~u))
    return frozenset(star)


def is_cubic_tangle(g, t):
    """A cubic set whose canonical star lies in ``t``, or None."""
    for x in cubic_sets(g):
        if includes_star(t, cubic_star(g, x)):
            return x
    return None
