"""Reading and writing graphs: graph6, plain edge lists and DOT."""

from .errors import ParseError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def _n_from_graph6(data, where):
    if not data:
        raise ParseError("empty graph6 string", where)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 4 and data[1] != 126:
        return _sextets(data[1:4], where), 4
    if len(data) >= 8:
        return _sextets(data[2:8], where), 8
    raise ParseError("truncated graph6 size field", where)


def _sextets(chunk, where):
    val = 0
    for c in chunk:
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c} outside the graph6 range", where)
        val = (val << 6) | (c - 63)
    return val


def parse_graph6(data):
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(GRAPH6_HEADER.encode()):
        data = data[len(GRAPH6_HEADER):]
    if data.startswith(b":") or data.startswith(b";"):
        raise ParseError("sparse6 and digraph6 are not supported", 0)
    n, start = _n_from_graph6(data, 0)
    need = n * (n - 1) // 2
    body = data[start:]
    if len(body) != (need + 5) // 6:
        raise ParseError(f"expected {(need + 5) // 6} data bytes for n={n}, got {len(body)}", start)
    bits = []
    for off, c in enumerate(body):
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c} outside the graph6 range", start + off)
        val = c - 63
        bits.extend((val >> (5 - i)) & 1 for i in range(6))
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    if any(bits[need:]):
        raise ParseError("nonzero padding bits", len(data) - 1)
    return Graph.from_edges(edges, n=n)


def to_graph6(g):
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for p in range(0, len(bits), 6):
        val = 0
        for b in bits[p:p + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return bytes(head + body).decode("ascii")


def parse_edge_list(text):
    """One ``u v`` pair per line, 0-based; blank lines and ``#`` comments ignored.

    A line holding a single integer declares an isolated vertex.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    edges = set()
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            ids = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"non-integer vertex id in {line!r}", lineno) from None
        if len(ids) not in (1, 2) or any(i < 0 for i in ids):
            raise ParseError(f"expected 'u v' with non-negative ids, got {line!r}", lineno)
        if len(ids) == 2:
            u, v = ids
            if u == v:
                raise ParseError(f"loop at vertex {u}", lineno)
            edges.add((min(u, v), max(u, v)))
        top = max(top, *ids)
    return Graph.from_edges(sorted(edges), n=top + 1)


def to_edge_list(g):
    lines = [f"{u} {v}" for u, v in g.sorted_edges()]
    lines += [str(v) for v in range(g.n) if g.degree(v) == 0]
    return "\n".join(lines) + "\n"


def to_dot(g, name="G"):
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dot(text):
    """Read back the undirected subset of DOT that :func:`to_dot` writes."""
    edges, verts = set(), set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip().rstrip(";").strip()
        if not line or line.startswith(("graph", "}", "//")):
            continue
        try:
            if "--" in line:
                u, v = (int(x) for x in line.split("--"))
                edges.add((min(u, v), max(u, v)))
                verts |= {u, v}
            else:
                verts.add(int(line.split("[")[0]))
        except ValueError:
            raise ParseError(f"unsupported DOT statement {raw!r}", lineno) from None
    return Graph.from_edges(sorted(edges), n=max(verts, default=-1) + 1)


def detect_format(path=None, data=b""):
    if path:
        low = str(path).lower()
        if low.endswith((".g6", ".graph6")):
            return "graph6"
        if low.endswith((".txt", ".edges", ".el", ".edgelist")):
            return "edge-list"
        if low.endswith(".dot"):
            return "dot"
    body = data.strip()
    if body.startswith((b"graph", b"strict", b"//")):
        return "dot"
    if not body or body[:1].isdigit() or body[:1] == b"#":
        return "edge-list"
    return "graph6"


def parse_graph(data, fmt=None):
    """Parse ``data`` (bytes or str) as ``graph6``, ``edge-list`` or ``dot``."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    fmt = fmt or detect_format(data=data)
    try:
        if fmt == "graph6":
            lines = [ln for ln in data.splitlines() if ln.strip()]
            if len(lines) != 1:
                raise ParseError(f"expected one graph6 line, got {len(lines)}", 0)
            return parse_graph6(lines[0])
        if fmt == "edge-list":
            return parse_edge_list(data)
        if fmt == "dot":
            return parse_dot(data.decode("utf-8"))
    except UnicodeDecodeError as e:
        raise ParseError("input is not text", e.start) from None
    except ValueError as e:
        raise ParseError(str(e)) from None
    raise ParseError(f"unknown format {fmt!r}")
