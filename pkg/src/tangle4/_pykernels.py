"""Pure-Python versions of the hot bit-set kernels.

Vertex sets are plain ``int`` bit masks, so these work for any vertex count.
The compiled module ``_ckernels`` exposes the same three functions with the
same results for graphs on at most 64 vertices.
"""


def components(adj, n, removed):
    """Vertex masks of the components of the graph minus ``removed``.

    Components are listed in order of their smallest vertex.
    """
    remaining = ((1 << n) - 1) & ~removed
    out = []
    while remaining:
        comp = frontier = remaining & -remaining
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= adj[low.bit_length() - 1]
                f ^= low
            frontier = reach & remaining & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def _edges_covered(a, b, c, adj, full):
    f = full
    while f:
        low = f & -f
        u = low.bit_length() - 1
        cov = 0
        if a & low:
            cov |= a
        if b & low:
            cov |= b
        if c & low:
            cov |= c
        if adj[u] & ~cov:
            return False
        f ^= low
    return True


def _prepare(sides, n):
    vm = sorted(set(sides), key=lambda s: (-s.bit_count(), s))
    sz = [s.bit_count() for s in vm]
    by_vertex = [[] for _ in range(n)]
    for idx, s in enumerate(vm):
        f = s
        while f:
            low = f & -f
            by_vertex[low.bit_length() - 1].append(idx)
            f ^= low
    return vm, sz, by_vertex


def _third(vm, sz, by_vertex, j, a, b, rest, adj, full):
    if rest == 0:
        for idx in range(j, len(vm)):
            if _edges_covered(a, b, vm[idx], adj, full):
                return vm[idx]
        return None
    need = rest.bit_count()
    r = (rest & -rest).bit_length() - 1
    for idx in by_vertex[r]:
        if idx < j:
            continue
        if sz[idx] < need:
            break
        c = vm[idx]
        if c & rest == rest and _edges_covered(a, b, c, adj, full):
            return c
    return None


def find_cover(sides, adj, n):
    """Find sides ``a, b, c`` (repetition allowed) whose induced subgraphs
    together contain every vertex and every edge.

    Returns the triple of masks, or ``None``.
    """
    full = (1 << n) - 1
    vm, sz, by_vertex = _prepare(sides, n)
    m = len(vm)
    for i in range(m):
        if 3 * sz[i] < n:
            break
        a = vm[i]
        for j in range(i, m):
            if sz[i] + 2 * sz[j] < n:
                break
            b = vm[j]
            c = _third(vm, sz, by_vertex, j, a, b, full & ~(a | b), adj, full)
            if c is not None:
                return (a, b, c)
    return None


def find_cover_with(x, sides, adj, n):
    """Like :func:`find_cover` but only triples that use ``x`` at least once.

    ``x`` is treated as a member of ``sides``.
    """
    full = (1 << n) - 1
    vm, sz, by_vertex = _prepare(list(sides) + [x], n)
    sx = x.bit_count()
    for j in range(len(vm)):
        if sx + 2 * sz[j] < n:
            break
        b = vm[j]
        c = _third(vm, sz, by_vertex, j, x, b, full & ~(x | b), adj, full)
        if c is not None:
            return (x, b, c)
    return None
