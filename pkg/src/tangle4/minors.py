"""Minor-maps ``G >= H`` given by branch sets, and the cube minor at a cubic set."""

from dataclasses import dataclass
from itertools import combinations

from .errors import DomainMismatch, NotCubic, WrongSize
from .graph import Graph, components, members, neighborhood, vset
from .separations import OrientedSeparation


@dataclass(frozen=True)
class MinorMap:
    """Branch set ``fibers[h]`` (a mask of domain vertices) for each codomain vertex ``h``."""

    domain: Graph
    codomain: Graph
    fibers: tuple

    @property
    def support(self):
        out = 0
        for f in self.fibers:
            out |= f
        return out

    def assignment(self):
        return {v: h for h, f in enumerate(self.fibers) for v in members(f)}

    def fiber(self, h):
        return self.fibers[h]


@dataclass(frozen=True)
class Validation:
    ok: bool
    reasons: tuple = ()

    def __bool__(self):
        return self.ok


def validate_model(m):
    g, h = m.domain, m.codomain
    reasons = []
    if len(m.fibers) != h.n:
        reasons.append(f"{len(m.fibers)} branch sets for {h.n} codomain vertices")
        return Validation(False, tuple(reasons))
    seen = 0
    for i, f in enumerate(m.fibers):
        if not f:
            reasons.append(f"branch set of {i} is empty")
            continue
        if f & ~g.full:
            reasons.append(f"branch set of {i} leaves the domain")
            continue
        if f & seen:
            reasons.append(f"branch set of {i} overlaps an earlier one")
        seen |= f
        if len(components(g, g.full & ~f)) != 1:
            reasons.append(f"branch set of {i} is disconnected")
    if not reasons:
        for x, y in sorted(h.edges):
            if not neighborhood(g, m.fibers[x]) & m.fibers[y]:
                reasons.append(f"edge {x}-{y} has no model edge")
    return Validation(not reasons, tuple(reasons))


def is_faithful(m):
    """Every codomain vertex's label is the label of a vertex of its own branch set."""
    if not validate_model(m):
        return False
    g, h = m.domain, m.codomain
    for x in h.vertices:
        if h.labels[x] not in {g.labels[v] for v in members(m.fibers[x])}:
            return False
    return True


def is_delta_minor_map(m):
    if not validate_model(m):
        return False
    h = m.codomain
    for x, f in enumerate(m.fibers):
        if f.bit_count() > 1 and not _in_triangle(h, x):
            return False
    return True


def _in_triangle(h, x):
    nb = h.adj[x]
    return any(h.adj[y] & nb for y in members(nb))


def induced_separation(m, s):
    """``phi(s)``: codomain vertices whose branch sets meet each side."""
    small = big = 0
    for x, f in enumerate(m.fibers):
        if f & s[0]:
            small |= 1 << x
        if f & s[1]:
            big |= 1 << x
    return OrientedSeparation(small, big)


@dataclass(frozen=True)
class CubicWitness:
    x: int
    component_choice: tuple  # (vertex, component mask) per member of x, ascending


def is_cubic(g, x):
    if x.bit_count() != 4:
        raise WrongSize(f"cubic sets have four vertices, got {x.bit_count()}")
    choice = {}
    for c in components(g, x):
        nb = neighborhood(g, c)
        if nb.bit_count() != 3:
            return None
        missing = x & ~nb
        v = members(missing)[0]
        choice.setdefault(v, c)
    if len(choice) != 4:
        return None
    return CubicWitness(x, tuple(sorted(choice.items())))


def cubic_sets(g):
    return [vset(xs) for xs in combinations(range(g.n), 4) if is_cubic(g, vset(xs))]


def standard_cube():
    """The cube with class A = 0..3, class B = 4..7 and ``i ~ j + 4`` for ``i != j``."""
    return Graph(8, frozenset((i, j + 4) for i in range(4) for j in range(4) if i != j))


def standard_cube_minor(g, x):
    witness = is_cubic(g, x)
    if witness is None:
        raise NotCubic(f"{members(x)} is not cubic")
    choice = dict(witness.component_choice)
    xs = members(x)
    fibers = tuple([choice[v] for v in xs] + [1 << v for v in xs])
    return MinorMap(g, standard_cube(), fibers)


def identity_map(g):
    return MinorMap(g, g, tuple(1 << v for v in g.vertices))


def compose(m1, m2):
    """``m1: G >= H`` followed by ``m2: H >= K``."""
    if m1.codomain != m2.domain:
        raise DomainMismatch("codomain of the first map is not the domain of the second")
    fibers = []
    for f in m2.fibers:
        out = 0
        for y in members(f):
            out |= m1.fibers[y]
        fibers.append(out)
    return MinorMap(m1.domain, m2.codomain, tuple(fibers))


def contraction(g, fibers, labels=None):
    """The map onto the graph obtained by contracting each branch set in ``fibers``."""
    fibers = tuple(fibers)
    edges = set()
    for i, j in combinations(range(len(fibers)), 2):
        if neighborhood(g, fibers[i]) & fibers[j]:
            edges.add((i, j))
    if labels is None:
        labels = tuple(g.labels[members(f)[0]] for f in fibers)
    return MinorMap(g, Graph(len(fibers), frozenset(edges), labels), fibers)
