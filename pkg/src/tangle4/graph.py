"""Simple undirected graphs on dense integer ids, with bit-set vertex sets.

A vertex set is a plain ``int`` whose bit ``i`` is set when vertex ``i`` is a
member.  Graphs carry a ``labels`` tuple recording, for each dense id, the id
the vertex had in whatever graph it was cut out of; torsos and blocks keep
their ambient labels so faithfulness can be checked by label.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from . import kernels


def vset(vertices):
    """Bit mask of an iterable of vertex ids."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask):
    """Sorted vertex ids of a bit mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask):
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset
    labels: tuple = None
    adj: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        edges = frozenset(_norm_edge(e) for e in self.edges)
        adj = [0] * self.n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {(u, v)} has an endpoint outside 0..{self.n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        labels = tuple(range(self.n)) if self.labels is None else tuple(self.labels)
        if len(labels) != self.n:
            raise ValueError("labels must have one entry per vertex")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_edges(cls, edges, n=None, labels=None):
        edges = [tuple(e) for e in edges]
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return cls(n, frozenset(edges), labels)

    @property
    def vertices(self):
        return range(self.n)

    @property
    def full(self):
        return (1 << self.n) - 1

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def degree(self, v):
        return self.adj[v].bit_count()

    def sorted_edges(self):
        return sorted(self.edges)

    def num_edges(self):
        return len(self.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def _norm_edge(e):
    u, v = e
    return (u, v) if u <= v else (v, u)


def induced_subgraph(g, mask, extra_edges=()):
    """Subgraph of ``g`` induced on ``mask``, relabelled densely in id order.

    ``extra_edges`` (pairs of ``g``-ids inside ``mask``) are added; the
    result keeps ``g``'s labels for its vertices.
    """
    ids = members(mask)
    index = {v: i for i, v in enumerate(ids)}
    edges = set()
    for u, v in g.edges:
        if u in index and v in index:
            edges.add((index[u], index[v]))
    for u, v in extra_edges:
        edges.add(_norm_edge((index[u], index[v])))
    return Graph(len(ids), frozenset(edges), tuple(g.labels[v] for v in ids))


def components(g, x=0):
    """Vertex masks of the components of ``g - x``, by smallest member."""
    return kernels.components(g.adj, g.n, x)


def neighborhood(g, s):
    out = 0
    for v in members(s):
        out |= g.adj[v]
    return out & ~s


def is_connected(g):
    return g.n > 0 and len(components(g)) == 1


def disjoint_paths(g, sources, targets, k):
    """``k`` vertex-disjoint paths from ``sources`` to ``targets``, or None.

    Each path is a list of ids starting in ``sources`` and ending in
    ``targets`` whose inner vertices avoid both sets.  A vertex in both sets
    is a path of length zero.  Uses unit vertex capacities and breadth-first
    augmentation that scans ids in increasing order.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = g.n
    # node 2v is v's entry, 2v+1 its exit; 2n is the source, 2n+1 the sink
    src, snk = 2 * n, 2 * n + 1
    cap = {}
    orig = {}
    out = [[] for _ in range(2 * n + 2)]

    def arc(a, b):
        orig[(a, b)] = cap[(a, b)] = 1
        cap.setdefault((b, a), 0)
        out[a].append(b)
        out[b].append(a)

    for v in range(n):
        arc(2 * v, 2 * v + 1)
    for v in members(sources):
        arc(src, 2 * v)
    for v in members(targets):
        arc(2 * v + 1, snk)
    for u, v in sorted(g.edges):
        # a path stops at the first target it reaches
        if not targets >> u & 1:
            arc(2 * u + 1, 2 * v)
        if not targets >> v & 1:
            arc(2 * v + 1, 2 * u)
    for nbrs in out:
        nbrs.sort()

    for _ in range(k):
        prev = {src: None}
        queue = deque([src])
        while queue and snk not in prev:
            a = queue.popleft()
            for b in out[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if snk not in prev:
            return None
        b = snk
        while prev[b] is not None:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a

    def used(a, b):
        return cap[(a, b)] < orig.get((a, b), 0)

    paths = []
    for v in members(sources):
        if not used(src, 2 * v):
            continue
        path = [v]
        node = 2 * v + 1
        while True:
            nxt = next(b for b in out[node] if (b == snk or b % 2 == 0) and used(node, b))
            if nxt == snk:
                break
            path.append(nxt // 2)
            node = nxt + 1
        paths.append(_trim(path, sources, targets))
    return paths


def _trim(path, sources, targets):
    end = next(i for i, v in enumerate(path) if targets >> v & 1)
    path = path[:end + 1]
    start = max(i for i, v in enumerate(path) if sources >> v & 1)
    return path[start:]


def separates(g, x):
    """True when deleting ``x`` leaves at least two components."""
    return len(components(g, x)) >= 2


@lru_cache(maxsize=4096)
def is_k_connected(g, k):
    if g.n <= k:
        return False
    if k <= 1:
        return is_connected(g)
    for size in range(k):
        for x in combinations(range(g.n), size):
            if separates(g, vset(x)):
                return False
    return True


def blocks(g):
    """Blocks of ``g`` as graphs whose labels are ``g``'s labels."""
    return [induced_subgraph(g, mask) for mask in block_masks(g)]


def block_masks(g):
    """Vertex masks of the blocks: maximal 2-connected pieces and bridges.

    Isolated vertices form single-vertex blocks.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out = []
    counter = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = counter
        counter += 1
        if not g.adj[root]:
            out.append(1 << root)
            continue
        edge_stack = []
        stack = [(root, -1, iter(members(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(members(g.adj[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    mask = 0
                    while True:
                        a, b = edge_stack.pop()
                        mask |= 1 << a | 1 << b
                        if (a, b) == (parent, v):
                            break
                    out.append(mask)
    return sorted(out, key=lambda m: (m & -m, m))


def cut_vertices(g):
    seen = {}
    for mask in block_masks(g):
        for v in members(mask):
            seen[v] = seen.get(v, 0) + 1
    return vset(v for v, c in seen.items() if c > 1)


def find_cycle_in(g, a=None):
    """A cycle of ``g[a]`` as a vertex list, or None if that graph is a forest."""
    if a is None:
        a = g.full
    parent = {}
    for root in members(a):
        if root in parent:
            continue
        parent[root] = None
        depth = {root: 0}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in members(g.adj[v] & a):
                if w == parent[v]:
                    continue
                if w in parent and w in depth:
                    if depth[w] <= depth[v]:
                        return _cycle_from(parent, v, w)
                    continue
                parent[w] = v
                depth[w] = depth[v] + 1
                stack.append(w)
    return None


def _cycle_from(parent, v, w):
    # walk both ends up to their common ancestor
    left, right = [v], [w]
    seen_left = {v}
    x = v
    while parent[x] is not None:
        x = parent[x]
        left.append(x)
        seen_left.add(x)
    y = w
    while y not in seen_left:
        y = parent[y]
        right.append(y)
    top = left.index(y)
    return left[:top + 1] + right[-2::-1]


def is_cycle_graph(g):
    return g.n >= 3 and is_connected(g) and all(g.degree(v) == 2 for v in g.vertices)


def relabel(g, perm):
    """Graph with vertex ``v`` renamed ``perm[v]`` (labels follow the vertex)."""
    labels = [None] * g.n
    for v in g.vertices:
        labels[perm[v]] = g.labels[v]
    return Graph(g.n, frozenset((perm[u], perm[v]) for u, v in g.edges), tuple(labels))


def _refine(adjs, offsets, total):
    # colour refinement on a disjoint union, returning one colour per vertex
    color = [0] * total
    for base, adj in zip(offsets, adjs):
        for v, nb in enumerate(adj):
            color[base + v] = nb.bit_count()
    while True:
        sigs = []
        for base, adj in zip(offsets, adjs):
            for v, nb in enumerate(adj):
                sigs.append((color[base + v], tuple(sorted(color[base + w] for w in members(nb)))))
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(set(new)) == len(set(color)):
            return new
        color = new


def are_isomorphic(g, h):
    """A vertex bijection ``g -> h`` (as a dict) preserving adjacency, or None."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return None
    n = g.n
    if n == 0:
        return {}
    color = _refine([g.adj, h.adj], [0, n], 2 * n)
    cg, ch = color[:n], color[n:]
    if sorted(cg) != sorted(ch):
        return None
    by_color = {}
    for v in range(n):
        by_color.setdefault(ch[v], []).append(v)

    # visit g's vertices so each one after the first has an earlier neighbour
    # where possible; rarer colours first
    order = []
    placed = 0
    while len(order) < n:
        frontier = [v for v in range(n) if not placed >> v & 1 and
                    (g.adj[v] & placed or not order or
                     not any(g.adj[u] & ~placed for u in order))]
        v = min(frontier, key=lambda v: (len(by_color[cg[v]]), -bool(g.adj[v] & placed), v))
        order.append(v)
        placed |= 1 << v

    mapping = {}
    used = 0

    def extend(i):
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in by_color[cg[v]]:
            if used >> w & 1:
                continue
            ok = True
            for u in order[:i]:
                if g.has_edge(u, v) != h.has_edge(mapping[u], w):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            del mapping[v]
            used &= ~(1 << w)
        return False

    return dict(mapping) if extend(0) else None
