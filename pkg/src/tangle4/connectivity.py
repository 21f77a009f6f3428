"""Claw-free 3-separations, internal and quasi 4-connectivity."""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import NotApplicable
from .graph import components, find_cycle_in, induced_subgraph, is_k_connected, members, vset
from .separations import enumerate_separations, is_proper, order


class SepTag(str, Enum):
    C1_CLAW = "C1_claw"
    C2_TWO_CYCLES = "C2_two_cycles"


@dataclass(frozen=True)
class SepClass:
    tag: SepTag
    claw_side: int = None  # the side inducing a claw, for C1


def is_claw(h):
    """True when ``h`` is K_{1,3}."""
    if h.n != 4 or len(h.edges) != 3:
        return False
    return sorted(h.degree(v) for v in h.vertices) == [1, 1, 1, 3]


def classify_3sep(g, s):
    if not is_k_connected(g, 3):
        raise NotApplicable("graph is not 3-connected")
    if order(s) != 3 or not is_proper(s):
        raise NotApplicable("not a proper 3-separation")
    x = s[0] & s[1]
    for side, other in ((s[0], s[1]), (s[1], s[0])):
        sub = induced_subgraph(g, side)
        if is_claw(sub):
            leaves = vset(members(side)[v] for v in sub.vertices if sub.degree(v) == 1)
            assert leaves == x, "claw leaves differ from the separator"
            assert find_cycle_in(g, other) is not None, "claw opposite a forest"
            return SepClass(SepTag.C1_CLAW, side)
    assert find_cycle_in(g, s[0]) is not None and find_cycle_in(g, s[1]) is not None
    return SepClass(SepTag.C2_TWO_CYCLES)


def is_claw_free(g, s):
    return classify_3sep(g, s).tag is SepTag.C2_TWO_CYCLES


def is_internally_4connected(g, reading="exact"):
    """3-connected, more than four vertices, and every 3-separator is
    independent and cuts off a single vertex.

    ``reading="exact"`` demands that ``g - X`` has exactly two components,
    one of them a single vertex.  ``reading="loose"`` only asks for some
    single-vertex component, so it accepts separators leaving several
    components (K_{3,3} passes under it).
    """
    if reading not in ("exact", "loose"):
        raise ValueError(f"unknown reading {reading!r}")
    if g.n <= 4 or not is_k_connected(g, 3):
        return False
    for xs in combinations(range(g.n), 3):
        x = vset(xs)
        comps = components(g, x)
        if len(comps) < 2:
            continue
        if any(g.adj[v] & x for v in xs):
            return False
        singles = sum(1 for c in comps if c.bit_count() == 1)
        if reading == "exact" and not (len(comps) == 2 and singles >= 1):
            return False
        if reading == "loose" and singles == 0:
            return False
    return True


def is_quasi_4connected(g):
    if g.n <= 4 or not is_k_connected(g, 3):
        return False
    for s in enumerate_separations(g, 3):
        if order(s) == 3 and min(s.a.bit_count(), s.b.bit_count()) > 4:
            return False
    return True
