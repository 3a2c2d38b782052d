"""Edge-list and graph6 text formats.

Edge-list (canonical for all tool output)::

    # comment
    p <n> <m>
    e <u> <v>      (m lines, 0-based, u < v)

The order of ``e`` lines defines the edge ids, so a coloring file indexed by
edge id stays meaningful across a write/read cycle.
"""

from __future__ import annotations

from .errors import GraphError, ParseError, VertexOutOfRange
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def format_edge_list(g: Graph) -> str:
    lines = [f"p {g.vertex_count} {g.edge_count}"]
    lines += [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    header = None
    pairs = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if header is not None:
                raise ParseError("second 'p' header", line=lineno)
            if len(parts) != 3:
                raise ParseError("header must be 'p <n> <m>'", line=lineno)
            header = (_int(parts[1], lineno), _int(parts[2], lineno))
            if header[0] < 0 or header[1] < 0:
                raise ParseError("negative count in header", line=lineno)
        elif tag == "e":
            if header is None:
                raise ParseError("edge line before 'p' header", line=lineno)
            if len(parts) != 3:
                raise ParseError("edge line must be 'e <u> <v>'", line=lineno)
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            n = header[0]
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(
                    f"edge ({u}, {v}) outside 0..{n - 1} (line {lineno})"
                )
            pairs.append((u, v, lineno))
        else:
            raise ParseError(f"unknown line tag {tag!r}", line=lineno)
    if header is None:
        raise ParseError("missing 'p <n> <m>' header")
    n, m = header
    if len(pairs) != m:
        raise ParseError(f"header announces {m} edges, found {len(pairs)}")
    try:
        return Graph(n, [(u, v) for u, v, _ in pairs])
    except GraphError as exc:
        # re-raise the same class with the offending line attached
        bad = _locate(pairs, exc)
        raise type(exc)(f"{exc} (line {bad})" if bad else str(exc)) from None


def _locate(pairs, exc):
    seen = set()
    for u, v, lineno in pairs:
        key = (min(u, v), max(u, v))
        if u == v or key in seen:
            return lineno
        seen.add(key)
    return None


def _int(token, lineno):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected integer, got {token!r}", line=lineno) from None


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return b"~" + bytes(((n >> s) & 63) + 63 for s in (12, 6, 0))
    return b"~~" + bytes(((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    n = g.vertex_count
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)
    )
    return (_encode_n(n) + body).decode("ascii")


def from_graph6(line: str, offset: int = 0) -> Graph:
    """Decode one graph6 string; ``offset`` shifts byte positions in errors."""
    data = line.strip().encode("ascii", errors="replace")
    if data.startswith(GRAPH6_HEADER.encode()):
        offset += len(GRAPH6_HEADER)
        data = data[len(GRAPH6_HEADER):]
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise ParseError(f"invalid graph6 character {chr(byte)!r}", byte=offset + pos)
    if not data:
        raise ParseError("empty graph6 string", byte=offset)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated graph6 size field", byte=offset + len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise ParseError("truncated graph6 size field", byte=offset + len(data))
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        pos = 4
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(
            f"graph6 body has {len(body)} bytes, expected {need} for n={n}",
            byte=offset + pos + min(len(body), need),
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def parse_graph6(text: str) -> list[Graph]:
    """One graph per non-empty line."""
    graphs = []
    offset = 0
    for raw in text.split("\n"):
        if raw.strip():
            graphs.append(from_graph6(raw, offset + len(raw) - len(raw.lstrip())))
        offset += len(raw) + 1
    return graphs


def format_graph6(graphs) -> str:
    return "".join(to_graph6(g) + "\n" for g in graphs)


def read_graph(path) -> Graph:
    """Load an edge-list file, or the first graph of a ``.g6`` file."""
    with open(path, encoding="ascii") as fh:
        text = fh.read()
    if str(path).endswith((".g6", ".graph6")):
        graphs = parse_graph6(text)
        if not graphs:
            raise ParseError("no graph in graph6 file")
        return graphs[0]
    return parse_edge_list(text)
