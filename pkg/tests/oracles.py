"""Brute-force reference implementations, independent of the library.

Graphs are given as ``(n, edges)``.  Everything here is written from the
definitions with no shared code, so agreement with the library is evidence
rather than tautology.
"""

from itertools import combinations, product

import numpy as np


def separations_bruteforce(n, edges, max_order):
    """All separations ``{A, B}`` of order <= max_order, by labelling every
    vertex A-only, B-only or both (3**n labellings)."""
    labels = np.array(list(product((0, 1, 2), repeat=n)), dtype=np.int8).reshape(-1, n)
    in_a = labels != 1  # 0 = A only, 1 = B only, 2 = both
    in_b = labels != 0
    ok = (labels == 2).sum(axis=1) <= max_order
    for u, v in edges:
        ok &= ~((labels[:, u] == 0) & (labels[:, v] == 1))
        ok &= ~((labels[:, u] == 1) & (labels[:, v] == 0))
    weights = (1 << np.arange(n, dtype=np.int64))
    a_masks = (in_a[ok] * weights).sum(axis=1)
    b_masks = (in_b[ok] * weights).sum(axis=1)
    out = set()
    for a, b in zip(a_masks.tolist(), b_masks.tolist()):
        out.add(frozenset([(a, b), (b, a)]) if a != b else frozenset([(a, b)]))
    return out


def _edge_mask(side, edges):
    m = 0
    for i, (u, v) in enumerate(edges):
        if side >> u & 1 and side >> v & 1:
            m |= 1 << i
    return m


def tangles_bruteforce(n, edges, k):
    """Every k-tangle, as a frozenset of oriented pairs ``(small, big)``.

    Orientations are chosen one separation at a time and a branch is
    abandoned as soon as the chosen small sides contain a covering multiset
    of at most three; since covering is preserved by adding members, this
    visits exactly the orientations a full 2**|S| filter would accept.
    """
    edges = sorted(tuple(sorted(e)) for e in edges)
    if len(edges) > 63 or n > 63:
        raise ValueError("oracle limited to 63 vertices and 63 edges")
    seps = sorted(separations_bruteforce(n, edges, k - 1), key=lambda s: sorted(s))
    full_v = (1 << n) - 1
    full_e = (1 << len(edges)) - 1
    # improper separations first: they are effectively forced
    seps.sort(key=lambda s: all(a & ~b and b & ~a for a, b in s))

    vm = np.zeros(len(seps) + 1, dtype=np.uint64)
    em = np.zeros(len(seps) + 1, dtype=np.uint64)
    chosen = []
    results = []

    def covers(depth, side_v, side_e):
        if side_v == full_v and side_e == full_e:
            return True
        cv = vm[:depth]
        ce = em[:depth]
        sv, se = np.uint64(side_v), np.uint64(side_e)
        fv, fe = np.uint64(full_v), np.uint64(full_e)
        if depth == 0:
            return False
        pv = cv | sv
        pe = ce | se
        if np.any((pv == fv) & (pe == fe)):
            return True
        tv = pv[:, None] | cv[None, :]
        te = pe[:, None] | ce[None, :]
        if np.any((tv == fv) & (te == fe)):
            return True
        return False

    def search(i):
        if i == len(seps):
            results.append(frozenset(chosen))
            return
        for small, big in sorted(seps[i]):
            sv = small
            se = _edge_mask(small, edges)
            if covers(i, sv, se):
                continue
            vm[i] = sv
            em[i] = se
            chosen.append((small, big))
            search(i + 1)
            chosen.pop()

    if n < k:
        return []
    search(0)
    return results


def is_k_connected_bruteforce(n, edges, k):
    if n <= k:
        return False
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for size in range(k):
        for cut in combinations(range(n), size):
            rest = [v for v in range(n) if v not in cut]
            seen = {rest[0]}
            stack = [rest[0]]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen and y not in cut:
                        seen.add(y)
                        stack.append(y)
            if len(seen) != len(rest):
                return False
    return True


def graph6_encode(n, edges):
    """Reference graph6 encoder for n <= 62 written from the format description."""
    if n > 62:
        raise ValueError("reference encoder handles n <= 62")
    es = {tuple(sorted(e)) for e in edges}
    bits = [1 if (i, j) in es else 0 for j in range(n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(63 + n)]
    for p in range(0, len(bits), 6):
        val = 0
        for b in bits[p:p + 6]:
            val = val * 2 + b
        chars.append(chr(63 + val))
    return "".join(chars)
