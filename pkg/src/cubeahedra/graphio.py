"""Reading and writing graphs: a plain edge-list format and graph6.

Edge-list format::

    # comment
    4          <- node count
    1 2        <- one edge per line, 1-based labels
    2 3

The header line may be omitted, in which case the node count is the largest
label seen. graph6 is the standard printable encoding used by nauty; see
``to_graph6`` for the byte layout.
"""

from __future__ import annotations

from .errors import GraphFormatError
from .graphs import MAX_NODES, Graph

GRAPH6_HEADER = ">>graph6<<"


def parse_edge_list(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected integers, got {raw.strip()!r}") from None
        if n is None and not edges and len(values) == 1:
            n = values[0]
            if n < 0:
                raise GraphFormatError(f"line {lineno}: negative node count {n}")
            if n > MAX_NODES:
                raise GraphFormatError(f"line {lineno}: node count {n} exceeds {MAX_NODES}")
            continue
        if len(values) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        u, v = values
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at node {u}")
        if min(u, v) < 1 or (n is not None and max(u, v) > n):
            bound = "" if n is None else f"..{n}"
            raise GraphFormatError(f"line {lineno}: node label out of range 1{bound} in {raw.strip()!r}")
        edges.append((min(u, v), max(u, v)))
    if n is None:
        n = max((v for _, v in edges), default=0)
        if n > MAX_NODES:
            raise GraphFormatError(f"largest label {n} exceeds {MAX_NODES}")
    return Graph.from_edges(n, set(edges))


def _graph6_size(data: bytes) -> tuple[int, int]:
    """Decode N(n); returns (n, offset of the edge bytes)."""
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise GraphFormatError("truncated graph6 size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` header is skipped)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise GraphFormatError("graph6 must be printable ASCII") from None
    for offset, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"offset {offset}: byte {b!r} outside graph6 range 63..126")
    n, start = _graph6_size(data)
    if n > MAX_NODES:
        raise GraphFormatError(f"graph6 node count {n} exceeds {MAX_NODES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[start:]
    if len(body) != need:
        raise GraphFormatError(f"offset {start}: expected {need} edge bytes for n={n}, got {len(body)}")
    bits = 0
    for b in body:
        bits = (bits << 6) | (b - 63)
    total = 6 * need
    edges = []
    k = 0
    # upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            if bits >> (total - 1 - k) & 1:
                edges.append((i + 1, j + 1))
            k += 1
    if bits & ((1 << (total - nbits)) - 1):
        raise GraphFormatError("nonzero padding bits in graph6 string")
    return Graph.from_edges(n, edges)


def to_graph6(G: Graph) -> str:
    n = G.n
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(G.adj[i] >> j & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        body.append(value + 63)
    return bytes(head + body).decode("ascii")


def to_edge_list(G: Graph) -> str:
    lines = [str(G.n)] + [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def detect_format(text: str) -> str:
    """``'edges'`` if the first meaningful byte is a digit or ``#``, else ``'graph6'``."""
    for ch in text:
        if ch.isspace():
            continue
        return "edges" if ch.isdigit() or ch == "#" else "graph6"
    return "edges"


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse edge-list or graph6 text; ``fmt`` is ``auto``, ``edges`` or ``graph6``."""
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "edges":
        return parse_edge_list(text)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected exactly one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0])
    raise ValueError(f"unknown format {fmt!r}")


def parse_inline_edges(text: str, n: int | None = None) -> Graph:
    """Parse ``"1-2,2-3"`` style edge lists used on the command line."""
    edges = []
    for k, item in enumerate(filter(None, (p.strip() for p in text.split(","))), start=1):
        try:
            u, v = (int(x) for x in item.split("-"))
        except ValueError:
            raise GraphFormatError(f"edge {k}: expected 'u-v', got {item!r}") from None
        if u == v:
            raise GraphFormatError(f"edge {k}: self-loop at node {u}")
        if min(u, v) < 1 or (n is not None and max(u, v) > n):
            raise GraphFormatError(f"edge {k}: node label out of range in {item!r}")
        edges.append((u, v))
    if n is None:
        n = max((max(e) for e in edges), default=0)
    if n > MAX_NODES:
        raise GraphFormatError(f"node count {n} exceeds {MAX_NODES}")
    return Graph.from_edges(n, edges)
