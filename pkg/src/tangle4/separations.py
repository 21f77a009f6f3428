"""Separations, orientations, stars, torsos and lifts.

A separation ``{A, B}`` is stored as a pair of bit masks with the side that
contains the smallest vertex of ``A ^ B`` first (``(V, V)`` is its own
canonical form).  An oriented separation ``(small, big)`` points towards
``big``.
"""

from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

from .errors import InvalidSeparation, NotAStar, NotNested, NotProper, SeparatorSplit
from .graph import components, induced_subgraph, members, vset


class Separation(NamedTuple):
    a: int
    b: int

    @property
    def separator(self):
        return self.a & self.b

    def orientations(self):
        return (OrientedSeparation(self.a, self.b), OrientedSeparation(self.b, self.a))


class OrientedSeparation(NamedTuple):
    small: int
    big: int

    @property
    def separator(self):
        return self.small & self.big

    def inverse(self):
        return OrientedSeparation(self.big, self.small)

    def unoriented(self):
        return canonical(self.small, self.big)


def leq(s, t):
    """``(A, B) <= (C, D)`` iff ``A <= C`` and ``B >= D``."""
    return s[0] & ~t[0] == 0 and t[1] & ~s[1] == 0


def less(s, t):
    return tuple(s) != tuple(t) and leq(s, t)


def canonical(a, b):
    d = a ^ b
    if d and not (a & d & -d):
        a, b = b, a
    return Separation(a, b)


def sort_key(s):
    return (s.a & s.b).bit_count(), s.a & s.b, s.a, s.b


def is_separation(g, a, b):
    if a | b != g.full:
        return False
    left = a & ~b
    for v in members(left):
        if g.adj[v] & ~a:
            return False
    return True


def make_separation(g, a, b):
    if a | b != g.full:
        raise InvalidSeparation(f"sides miss vertices {members(g.full & ~(a | b))}")
    left, right = a & ~b, b & ~a
    for v in members(left):
        bad = g.adj[v] & right
        if bad:
            raise InvalidSeparation(f"edge {v}-{members(bad)[0]} crosses the separation")
    return canonical(a, b)


def make_oriented(g, small, big):
    make_separation(g, small, big)
    return OrientedSeparation(small, big)


def order(s):
    return (s[0] & s[1]).bit_count()


def is_proper(s):
    a, b = s[0], s[1]
    return bool(a & ~b) and bool(b & ~a)


@lru_cache(maxsize=256)
def enumerate_separations(g, max_order):
    """Every separation of order at most ``max_order``, proper or not.

    For each separator ``X`` the separations with ``A & B == X`` are the
    bipartitions of the components of ``g - X``; there are ``2**(c-1)`` of
    them for ``c`` components.  Sorted by :func:`sort_key`.
    """
    out = set()
    full = g.full
    for size in range(min(max_order, g.n) + 1):
        for xs in combinations(range(g.n), size):
            x = vset(xs)
            comps = components(g, x)
            if not comps:
                out.add(Separation(full, full))
                continue
            first, rest = comps[0], comps[1:]
            for bits in range(1 << len(rest)):
                left = first
                for i, c in enumerate(rest):
                    if bits >> i & 1:
                        left |= c
                out.add(canonical(left | x, full & ~left))
    return tuple(sorted(out, key=sort_key))


def proper_separations(g, k):
    """Proper separations of order exactly ``k``."""
    return [s for s in enumerate_separations(g, k) if order(s) == k and is_proper(s)]


def is_nested(s, t):
    s1, s2 = (OrientedSeparation(s[0], s[1]), OrientedSeparation(s[1], s[0]))
    for o in (s1, s2):
        for p in (OrientedSeparation(t[0], t[1]), OrientedSeparation(t[1], t[0])):
            if leq(o, p):
                return True
    return False


def corners(s, t):
    """The four corner separations of oriented ``s = (A, B)`` and ``t = (C, D)``."""
    a, b = s[0], s[1]
    c, d = t[0], t[1]
    return (
        canonical(a & c, b | d),
        canonical(a & d, b | c),
        canonical(b & c, a | d),
        canonical(b & d, a | c),
    )


def is_star(elements):
    elements = list(elements)
    for i, s in enumerate(elements):
        for t in elements[i + 1:]:
            if not (leq(s, t.inverse()) and leq(t, s.inverse())):
                return False
    return True


def bag(g, star):
    out = g.full
    for s in star:
        out &= s.big
    return out


def torso_edges(g, star):
    """Extra edges (in ``g``'s ids) that complete the star's separators to cliques."""
    extra = set()
    for s in star:
        for u, v in combinations(members(s.separator), 2):
            if not g.has_edge(u, v):
                extra.add((u, v))
    return sorted(extra)


def torso(g, star):
    """Torso of ``star``; vertex ``i`` is the ``i``-th bag member, labels kept."""
    star = list(star)
    if not is_star(star):
        raise NotAStar("the given set of oriented separations is not a star")
    return induced_subgraph(g, bag(g, star), torso_edges(g, star))


def to_ambient(mask, bag_mask):
    """Translate a torso vertex mask to the ambient ids of ``bag_mask``."""
    ids = members(bag_mask)
    return vset(ids[i] for i in members(mask))


def to_torso(mask, bag_mask):
    index = {v: i for i, v in enumerate(members(bag_mask))}
    return vset(index[v] for v in members(mask & bag_mask))


def interlaces(s, star):
    u, w = OrientedSeparation(s[0], s[1]), OrientedSeparation(s[1], s[0])
    return all(less(x, u) or less(x, w) for x in star)


def check_nested(seps):
    seps = list(seps)
    for i, s in enumerate(seps):
        for t in seps[i + 1:]:
            if not is_nested(s, t):
                raise NotNested(f"{s} and {t} cross")


def splitting_stars(g, seps):
    """The splitting stars of a nested set of proper separations.

    The star at the tree node on the ``B``-side of ``(A, B)`` is ``(A, B)``
    together with the maximal oriented separations strictly below ``(B, A)``.
    There is one star per node of the induced tree, ``len(seps) + 1`` in all.
    """
    seps = sorted(set(seps), key=sort_key)
    check_nested(seps)
    if not seps:
        return [frozenset()]
    oriented = [o for s in seps for o in s.orientations()]
    stars = []
    seen = set()
    for o in oriented:
        inv = o.inverse()
        below = [p for p in oriented if less(p, inv)]
        maximal = [p for p in below if not any(less(p, q) for q in below)]
        star = frozenset([o, *maximal])
        if star not in seen:
            seen.add(star)
            stars.append(star)
    if len(stars) != len(seps) + 1:
        raise NotNested(f"expected {len(seps) + 1} splitting stars, found {len(stars)}")
    for star in stars:
        if not is_star(star):
            raise NotNested("a derived node star is not a star")
    return sorted(stars, key=_star_key)


def _star_key(star):
    return sorted((s.small, s.big) for s in star)


def is_splitting_star(star, seps):
    oriented = {o for s in seps for o in s.orientations()}
    if not set(star) <= oriented or not is_star(star):
        return False
    for s in seps:
        c, d = s.orientations()
        if not any(leq(c, x) or leq(d, x) for x in star):
            return False
    return True


def tree_decomposition(g, seps):
    """Nodes (splitting stars) and tree edges ``(i, j, separation)``."""
    stars = splitting_stars(g, seps)
    where = {}
    for i, star in enumerate(stars):
        for o in star:
            where[o] = i
    edges = []
    for s in sorted(set(seps), key=sort_key):
        x, y = s.orientations()
        edges.append((where[x], where[y], s))
    return stars, edges


def lift_separation(g, seps, star, s):
    """Lift a proper separation ``s`` of the star's torso (torso ids) to ``g``.

    Each star element's far side goes to the side of ``s`` holding its
    separator; if the separator lies in both sides it goes to ``s``'s first
    (canonical) side.
    """
    if not is_proper(s):
        raise NotProper("only proper separations of the torso lift")
    b_mask = bag(g, star)
    s = canonical(s[0], s[1])
    a_hat, b_hat = to_ambient(s.a, b_mask), to_ambient(s.b, b_mask)
    for el in sorted(star):
        x = el.separator
        far = el.small & ~el.big
        in_a, in_b = x & ~a_hat == 0, x & ~b_hat == 0
        if in_a:
            a_hat |= far
        elif in_b:
            b_hat |= far
        else:
            raise SeparatorSplit(f"separator {members(x)} meets both strict sides")
    return make_separation(g, a_hat, b_hat)


def restrict(s, mask):
    """``{A & mask, B & mask}`` for a separation of a graph on ``mask``."""
    return canonical(s[0] & mask, s[1] & mask)


def separation_graph(g, s):
    return induced_subgraph(g, s[0]), induced_subgraph(g, s[1])
